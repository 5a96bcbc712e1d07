"""Reference data: 36 collared tiles, 45 edges, 10 vertices, 36 subdivision rules.

The tables ship as plain CSV under tilespace/data/ and are the ground truth
every derivation in this package is checked against.  Loading is strict:
duplicate or missing ids, out-of-range values and non-canonical rows are
load-time errors.  Semantic cross-checks (rule closure, central child, child
coverage) live in validate_dataset so that deliberately broken in-memory
datasets can still be inspected.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import (
    CollaredEdge,
    CollaredTile,
    CollaredVertex,
    TilespaceError,
    canonicalize_edge,
    canonicalize_vertex,
)


class DatasetError(TilespaceError, ValueError):
    pass


CENTRAL_CHILD = 22

_TILE_HEADER = ["id", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q", "r", "s", "t"]
_EDGE_HEADER = ["id", "a", "b", "c", "d", "e", "f", "g", "h"]
_VERTEX_HEADER = ["id", "a", "b", "c", "d"]
_RULE_HEADER = ["parent", "c1", "c2", "c3", "c4", "c5", "c6"]


@dataclass(frozen=True)
class SubstitutionRule:
    """One subdivision rule: parent tile id and its 6 children in list order.

    children[0] is the central child (always tile 22 in the canonical data);
    children[1..5] are the peripheral children in the rule's cyclic order.
    """

    parent: int
    children: tuple

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        if len(self.children) != 6:
            raise DatasetError(
                f"rule {self.parent}: expected 6 children, got {len(self.children)}")


@dataclass(frozen=True)
class PentagonDataset:
    tiles: tuple
    edges: tuple
    vertices: tuple
    rules: tuple

    def tile(self, tid: int) -> CollaredTile:
        if 1 <= tid <= len(self.tiles) and self.tiles[tid - 1].id == tid:
            return self.tiles[tid - 1]
        for t in self.tiles:
            if t.id == tid:
                return t
        raise KeyError(f"no tile with id {tid}")

    def edge(self, eid: int) -> CollaredEdge:
        if 1 <= eid <= len(self.edges) and self.edges[eid - 1].id == eid:
            return self.edges[eid - 1]
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(f"no edge with id {eid}")

    def vertex(self, vid: int) -> CollaredVertex:
        if 1 <= vid <= len(self.vertices) and self.vertices[vid - 1].id == vid:
            return self.vertices[vid - 1]
        for v in self.vertices:
            if v.id == vid:
                return v
        raise KeyError(f"no vertex with id {vid}")

    def rule(self, parent: int) -> SubstitutionRule:
        if 1 <= parent <= len(self.rules) and self.rules[parent - 1].parent == parent:
            return self.rules[parent - 1]
        for r in self.rules:
            if r.parent == parent:
                return r
        raise KeyError(f"no rule for parent {parent}")


def _parse_rows(text: str, filename: str, header):
    reader = csv.reader(io.StringIO(text), skipinitialspace=True)
    rows = []
    got_header = False
    for lineno, row in enumerate(reader, start=1):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if not got_header:
            if [c.strip() for c in row] != header:
                raise DatasetError(
                    f"{filename} line {lineno}: expected header "
                    f"{', '.join(header)!r}, got {', '.join(row)!r}")
            got_header = True
            continue
        if len(row) != len(header):
            raise DatasetError(
                f"{filename} line {lineno}: expected {len(header)} fields, "
                f"got {len(row)}")
        values = []
        for col, cell in enumerate(row, start=1):
            try:
                values.append(int(cell.strip()))
            except ValueError:
                raise DatasetError(
                    f"{filename} line {lineno}, column {col}: "
                    f"invalid integer {cell.strip()!r}") from None
        rows.append((lineno, values))
    if not got_header:
        raise DatasetError(f"{filename}: missing header line")
    return rows


def _check_ids(rows, filename, count, what):
    seen = {}
    for lineno, values in rows:
        rid = values[0]
        if rid in seen:
            raise DatasetError(
                f"{filename} line {lineno}: duplicate id {rid} "
                f"(first seen on line {seen[rid]})")
        seen[rid] = lineno
    missing = set(range(1, count + 1)) - set(seen)
    if missing:
        listed = ", ".join(str(i) for i in sorted(missing))
        raise DatasetError(f"{filename}: missing {what} ids: {{{listed}}}")
    extra = set(seen) - set(range(1, count + 1))
    if extra:
        listed = ", ".join(str(i) for i in sorted(extra))
        raise DatasetError(f"{filename}: unexpected {what} ids: {{{listed}}}")


def parse_tiles(text: str, filename: str = "tiles.csv") -> tuple:
    rows = _parse_rows(text, filename, _TILE_HEADER)
    _check_ids(rows, filename, 36, "tile")
    tiles = {}
    for lineno, v in rows:
        groups = tuple(tuple(v[1 + 3 * g:4 + 3 * g]) for g in range(5))
        try:
            tiles[v[0]] = CollaredTile(groups, id=v[0])
        except TilespaceError as exc:
            raise DatasetError(f"{filename} line {lineno}: {exc}") from exc
    return tuple(tiles[i] for i in range(1, 37))


def parse_edges(text: str, filename: str = "edges.csv") -> tuple:
    rows = _parse_rows(text, filename, _EDGE_HEADER)
    _check_ids(rows, filename, 45, "edge")
    edges = {}
    for lineno, v in rows:
        raw = (tuple(v[1:5]), tuple(v[5:9]))
        try:
            canon = canonicalize_edge(raw)
        except TilespaceError as exc:
            raise DatasetError(f"{filename} line {lineno}: {exc}") from exc
        if raw != canon.sides:
            raise DatasetError(
                f"{filename} line {lineno}: edge {raw} is not canonical; "
                f"canonical form is {canon.sides}")
        edges[v[0]] = CollaredEdge(canon.side_a, canon.side_b, id=v[0])
    return tuple(edges[i] for i in range(1, 46))


def parse_vertices(text: str, filename: str = "vertices.csv") -> tuple:
    rows = _parse_rows(text, filename, _VERTEX_HEADER)
    _check_ids(rows, filename, 10, "vertex")
    vertices = {}
    for lineno, v in rows:
        cycle = tuple(v[1:5])
        try:
            canon = canonicalize_vertex(cycle)
        except TilespaceError as exc:
            raise DatasetError(f"{filename} line {lineno}: {exc}") from exc
        if cycle != canon.decos:
            raise DatasetError(
                f"{filename} line {lineno}: vertex {cycle} is not canonical; "
                f"canonical form is {canon.decos}")
        vertices[v[0]] = CollaredVertex(cycle, id=v[0])
    return tuple(vertices[i] for i in range(1, 11))


def parse_rules(text: str, filename: str = "rules.csv") -> tuple:
    rows = _parse_rows(text, filename, _RULE_HEADER)
    _check_ids(rows, filename, 36, "rule")
    rules = {}
    for lineno, v in rows:
        children = tuple(v[1:7])
        for c in children:
            if not 1 <= c <= 36:
                raise DatasetError(
                    f"{filename} line {lineno}: child id {c} out of range 1..36")
        rules[v[0]] = SubstitutionRule(v[0], children)
    return tuple(rules[i] for i in range(1, 37))


def _read(path, name):
    if path is None:
        return (resources.files(__package__) / "data" / name).read_text()
    p = Path(path) / name
    if not p.exists():
        raise DatasetError(f"dataset file not found: {p}")
    return p.read_text()


def load_dataset(path=None) -> PentagonDataset:
    """Load the dataset from a directory, or the embedded copy when path is None."""
    return PentagonDataset(
        tiles=parse_tiles(_read(path, "tiles.csv")),
        edges=parse_edges(_read(path, "edges.csv")),
        vertices=parse_vertices(_read(path, "vertices.csv")),
        rules=parse_rules(_read(path, "rules.csv")),
    )


# --- serialization ---------------------------------------------------------

def serialize_tiles(tiles) -> str:
    lines = ["id, f,g,h, i,j,k, l,m,n, o,p,q, r,s,t"]
    for t in sorted(tiles, key=lambda t: t.id):
        groups = ", ".join(",".join(str(x) for x in g) for g in t.exterior)
        lines.append(f"{t.id}, {groups}")
    return "\n".join(lines) + "\n"


def serialize_edges(edges) -> str:
    lines = ["id, a,b,c,d, e,f,g,h"]
    for e in sorted(edges, key=lambda e: e.id):
        a = ",".join(str(x) for x in e.side_a)
        b = ",".join(str(x) for x in e.side_b)
        lines.append(f"{e.id}, {a}, {b}")
    return "\n".join(lines) + "\n"


def serialize_vertices(vertices) -> str:
    lines = ["id, a,b,c,d"]
    for v in sorted(vertices, key=lambda v: v.id):
        lines.append(f"{v.id}, " + ",".join(str(x) for x in v.decos))
    return "\n".join(lines) + "\n"


def serialize_rules(rules) -> str:
    lines = ["parent, c1,c2,c3,c4,c5,c6"]
    for r in sorted(rules, key=lambda r: r.parent):
        lines.append(f"{r.parent}, " + ",".join(str(c) for c in r.children))
    return "\n".join(lines) + "\n"


def serialize_dataset(d: PentagonDataset, directory) -> None:
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    (directory / "tiles.csv").write_text(serialize_tiles(d.tiles))
    (directory / "edges.csv").write_text(serialize_edges(d.edges))
    (directory / "vertices.csv").write_text(serialize_vertices(d.vertices))
    (directory / "rules.csv").write_text(serialize_rules(d.rules))


# --- validation ------------------------------------------------------------

@dataclass(frozen=True)
class ValidationCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def validate_dataset(d: PentagonDataset) -> ValidationReport:
    """Semantic validation of a loaded (or hand-built) dataset."""
    checks = []

    def add(name, passed, detail=""):
        checks.append(ValidationCheck(name, bool(passed), detail))

    tile_ids = sorted(t.id for t in d.tiles)
    add("tile ids are exactly 1..36", tile_ids == list(range(1, 37)),
        f"got {len(tile_ids)} ids" if tile_ids != list(range(1, 37)) else "")
    edge_ids = sorted(e.id for e in d.edges)
    add("edge ids are exactly 1..45", edge_ids == list(range(1, 46)))
    vertex_ids = sorted(v.id for v in d.vertices)
    add("vertex ids are exactly 1..10", vertex_ids == list(range(1, 11)))
    rule_ids = sorted(r.parent for r in d.rules)
    add("every tile has exactly one rule", rule_ids == list(range(1, 37)),
        "" if rule_ids == list(range(1, 37)) else f"rule parents: {rule_ids}")

    bad_edges = [e.id for e in d.edges
                 if e.sides != canonicalize_edge(e.sides).sides]
    add("all edges stored in canonical form", not bad_edges,
        f"non-canonical edge ids: {bad_edges}" if bad_edges else "")
    bad_verts = [v.id for v in d.vertices
                 if v.decos != canonicalize_vertex(v.decos).decos]
    add("all vertices stored in canonical form", not bad_verts,
        f"non-canonical vertex ids: {bad_verts}" if bad_verts else "")

    known = {t.id for t in d.tiles}
    open_rules = [r.parent for r in d.rules
                  if any(c not in known for c in r.children)]
    add("rule closure: every child is a listed tile", not open_rules,
        f"rules with unknown children: {open_rules}" if open_rules else "")

    off_center = [r.parent for r in d.rules if r.children[0] != CENTRAL_CHILD]
    add(f"central child is tile {CENTRAL_CHILD} in every rule", not off_center,
        f"rules with a different central child: {off_center}" if off_center else "")

    covered = {c for r in d.rules for c in r.children}
    uncovered = sorted(known - covered)
    add("every tile occurs as a child of some rule", not uncovered,
        f"never a child: {uncovered}" if uncovered else "")

    return ValidationReport(tuple(checks))
