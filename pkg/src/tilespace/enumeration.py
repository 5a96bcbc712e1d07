"""Re-derive the 36 collared tiles from the 20-row exterior pattern table.

Each pattern row fixes 14 of the 15 exterior entries and leaves one slot open
(the y slot, stored as -1).  The open slot ranges over a cyclic open interval
plus, optionally, the degree-3 marker 0.  Five rows have their 0 case struck:
it would put a forbidden decoration triple on a degree-3 vertex.  The union of
all row expansions plus the single closed-collar tile must reproduce the tile
table exactly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .core import CollaredTile, TilespaceError, cyclic_open_interval
from .dataset import DatasetError, PentagonDataset, load_dataset

# The five decoration triples that never occur on a degree-3 vertex.
FORBIDDEN_TRIPLES = frozenset({
    frozenset({1, 2, 5}),
    frozenset({1, 2, 3}),
    frozenset({1, 4, 5}),
    frozenset({2, 3, 4}),
    frozenset({3, 4, 5}),
})

# Rows whose y=0 candidate is excluded because the degree-3 vertex it would
# create carries a forbidden triple (see implied_degree3_vertex).
EXCLUDED_ROWS = frozenset({3, 7, 11, 15, 19})

# The one exterior pattern with a closed collar (every vertex degree 3).
PATTERN_ONE_TILE = ((5, 4, 0), (1, 5, 0), (2, 1, 0), (3, 2, 0), (4, 3, 0))

Y_SLOT = -1

_HEADER = ["rowid",
           "g1a", "g1b", "g1c", "g2a", "g2b", "g2c", "g3a", "g3b", "g3c",
           "g4a", "g4b", "g4c", "g5a", "g5b", "g5c",
           "lo", "hi", "allowzero"]


class EnumerationMismatchError(TilespaceError):
    """Derived tile set differs from the reference table."""

    def __init__(self, missing, extra):
        self.missing = frozenset(missing)
        self.extra = frozenset(extra)
        super().__init__(
            f"derived tiles do not match the reference table: "
            f"{len(self.missing)} missing, {len(self.extra)} extra")


@dataclass(frozen=True)
class PatternRow:
    rowid: int
    template: tuple   # 5 groups of 3; exactly one entry is the sentinel -1
    lo: int
    hi: int
    allow_zero: bool

    def __post_init__(self):
        object.__setattr__(self, "template",
                           tuple(tuple(g) for g in self.template))
        open_slots = sum(1 for g in self.template for x in g if x == Y_SLOT)
        if open_slots != 1:
            raise DatasetError(
                f"pattern row {self.rowid}: expected exactly one open slot, "
                f"got {open_slots}")

    @property
    def y_group(self) -> int:
        """0-based index of the group holding the open slot."""
        for i, g in enumerate(self.template):
            if Y_SLOT in g:
                return i
        raise AssertionError("unreachable: validated in __post_init__")


def load_pattern_rows(path=None) -> tuple:
    """Load the 20-row pattern table (embedded copy when path is None)."""
    if path is None:
        text = (resources.files(__package__) / "data" / "patternrows.csv").read_text()
    else:
        text = (Path(path) / "patternrows.csv").read_text()
    reader = csv.reader(io.StringIO(text), skipinitialspace=True)
    rows = []
    header_seen = False
    for lineno, row in enumerate(reader, start=1):
        if not row:
            continue
        if not header_seen:
            if [c.strip() for c in row] != _HEADER:
                raise DatasetError(f"patternrows.csv line {lineno}: bad header")
            header_seen = True
            continue
        v = [int(c) for c in row]
        template = tuple(tuple(v[1 + 3 * g:4 + 3 * g]) for g in range(5))
        rows.append(PatternRow(v[0], template, v[16], v[17], bool(v[18])))
    if len(rows) != 20:
        raise DatasetError(f"patternrows.csv: expected 20 rows, got {len(rows)}")
    return tuple(rows)


def exclusion_reason(row: PatternRow):
    """Forbidden triple the y=0 case would create, or None if 0 is fine."""
    if not row.allow_zero:
        return None
    triple = implied_degree3_vertex(row)
    return triple if triple in FORBIDDEN_TRIPLES else None


def implied_degree3_vertex(row: PatternRow) -> frozenset:
    """The triple the y=0 case would place on the degree-3 vertex it creates.

    The open slot is the diagonal entry of group g; setting it to 0 makes the
    vertex at corner g+1 degree 3, surrounded by that corner's interior value,
    the second entry of group g and the first entry of group g+1.
    """
    g = row.y_group
    nxt = (g + 1) % 5
    corner_value = nxt + 1  # interior decoration at 0-based corner nxt
    return frozenset({corner_value, row.template[g][1], row.template[nxt][0]})


def y_candidates(row: PatternRow, apply_exclusion: bool = True) -> tuple:
    """Allowed values for the open slot, 0 first, then the in-range values."""
    values = sorted(cyclic_open_interval(row.lo, row.hi))
    if row.allow_zero and not (apply_exclusion and exclusion_reason(row)):
        values = [0] + values
    return tuple(values)


def expand_pattern_row(row: PatternRow, apply_exclusion: bool = True) -> tuple:
    """All candidate tiles of one pattern row, in y-value order."""
    out = []
    for y in y_candidates(row, apply_exclusion):
        groups = tuple(
            tuple(y if x == Y_SLOT else x for x in g) for g in row.template)
        out.append(CollaredTile(groups))
    return tuple(out)


def enumerate_collared_tiles(d: PentagonDataset = None, verify: bool = True):
    """Expand every row, add the closed-collar tile, and compare to the table.

    Returns the derived tiles as a frozenset, with ids matched from the
    reference dataset.  Raises EnumerationMismatchError on any difference.
    """
    if d is None:
        d = load_dataset()
    derived = set()
    for row in load_pattern_rows():
        for t in expand_pattern_row(row):
            derived.add(t.exterior)
    derived.add(PATTERN_ONE_TILE)
    if verify:
        reference = {t.exterior: t.id for t in d.tiles}
        missing = set(reference) - derived
        extra = derived - set(reference)
        if missing or extra:
            raise EnumerationMismatchError(missing, extra)
        return frozenset(CollaredTile(ext, id=reference[ext]) for ext in derived)
    return frozenset(CollaredTile(ext) for ext in derived)


def enumeration_report(d: PentagonDataset = None) -> dict:
    """Machine-readable summary of the full enumeration."""
    if d is None:
        d = load_dataset()
    rows = load_pattern_rows()
    per_row = []
    pattern2_total = 0
    for row in rows:
        before = len(expand_pattern_row(row, apply_exclusion=False))
        after = len(expand_pattern_row(row))
        pattern2_total += after
        per_row.append({
            "row": row.rowid,
            "candidatesBeforeExclusion": before,
            "candidatesAfterExclusion": after,
            "excluded": exclusion_reason(row) is not None,
        })
    try:
        tiles = enumerate_collared_tiles(d)
        match = "exact"
        mismatch = None
    except EnumerationMismatchError as exc:
        tiles = frozenset()
        match = "mismatch"
        mismatch = {"missing": sorted(map(list, map(sorted, exc.missing))),
                    "extra": sorted(map(list, map(sorted, exc.extra)))}
    report = {
        "perRow": per_row,
        "pattern2Candidates": pattern2_total,
        "pattern1Candidates": 1,
        "derived": pattern2_total + 1,
        "distinct": len(tiles) if tiles else None,
        "match": match,
    }
    if mismatch is not None:
        report["mismatch"] = mismatch
    return report
