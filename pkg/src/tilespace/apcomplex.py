"""The quotient CW-complex of the collared tiles and its substitution maps.

The complex has one 2-cell per collared tile, one 1-cell per collared edge and
one 0-cell per collared vertex.  Boundary matrices carry orientation signs:
every canonical edge is directed from the vertex read off its first side, and
a face traverses its five slot edges in slot order, signed by whether the slot
walk agrees with the edge's canonical direction.

To subdivide, each rule's six children fill a patch: one central child and
five peripheral ones, each peripheral child sitting at a parent corner.  Which
list position lands at which corner, and how every child is rotated, is not
recoverable from the rule lists alone; it is pinned down by searching all
global assignments for the ones making every internal child/child edge match
and every boundary half-edge agree with the parent collar.  The search has a
unique winner, frozen below as CANONICAL_PLACEMENT_PARAMS; `derive_placement`
re-runs it, and a test asserts uniqueness.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass

from .collaring import raw_edge_sides, vertex_from_side, vertices_from_edge
from .core import TilespaceError, canonicalize_edge, canonicalize_vertex, zero_first
from .dataset import PentagonDataset, SubstitutionRule, load_dataset
from .matrix import freeze, is_zero, matmul, shape, transpose

log = logging.getLogger(__name__)


class PlacementError(TilespaceError):
    pass


class ComplexError(TilespaceError):
    pass


class ChainMapError(TilespaceError):
    pass


@dataclass(frozen=True)
class PlacementParams:
    """Global convention placing a rule's children inside the parent patch.

    Rule list position k (1..5; position 0 is the center) sits at parent
    corner (offset + direction*(k-1)) mod 5.  A child whose rotation is r has
    its tile-frame slot (r + m) mod 5 lying on structural slot m of its patch
    position (orient 0; orient 1 reverses the walk).
    """

    orient: int
    offset: int
    direction: int
    rot_center: int
    rot_peripheral: tuple

    def corner_of_position(self, k: int) -> int:
        """Parent corner (0-based) taken by rule list position k (1..5)."""
        return (self.offset + self.direction * (k - 1)) % 5

    def child_slot(self, rot: int, m: int) -> int:
        """0-based tile-frame slot lying on structural slot m."""
        return (rot + m) % 5 if self.orient == 0 else (rot - m - 1) % 5

    def vertex_transport(self) -> dict:
        """Decoration at an old parent vertex as seen by the corner child."""
        out = {0: 0}
        for v in range(1, 6):
            r = self.rot_peripheral[v - 1]
            out[v] = (r + 1) % 5 + 1 if self.orient == 0 else (r - 1) % 5 + 1
        return out


CANONICAL_PLACEMENT_PARAMS = PlacementParams(
    orient=0, offset=0, direction=1, rot_center=0, rot_peripheral=(4, 0, 1, 2, 3))


@dataclass(frozen=True)
class Placement:
    """A consistent child placement; `solutions` lists every winner found."""

    params: PlacementParams
    solutions: tuple

    @property
    def ambiguous(self) -> bool:
        return len(self.solutions) > 1

    def center_child(self, rule: SubstitutionRule) -> int:
        return rule.children[0]

    def child_at_corner(self, rule: SubstitutionRule, corner: int) -> int:
        """Child id sitting at parent corner 0..4."""
        for k in range(1, 6):
            if self.params.corner_of_position(k) == corner % 5:
                return rule.children[k]
        raise AssertionError("unreachable: positions cover all corners")

    def edge_cover(self, rule: SubstitutionRule, slot: int) -> tuple:
        """The two (child id, child slot 1..5) halves of parent slot 1..5.

        Ordered along the walk from parent corner slot to corner slot+1.
        """
        p = self.params
        s = slot - 1
        first = self.child_at_corner(rule, s)
        second = self.child_at_corner(rule, (s + 1) % 5)
        first_slot = p.child_slot(p.rot_peripheral[s], 1)
        second_slot = p.child_slot(p.rot_peripheral[(s + 1) % 5], 0)
        return ((first, first_slot + 1), (second, second_slot + 1))


def _sides_cache(d: PentagonDataset) -> dict:
    return {(t.id, slot): raw_edge_sides(t, slot)
            for t in d.tiles for slot in range(1, 6)}


def _structural_side(sides, params, tile_id, rot, m, end):
    """Raw side of a child's structural-slot-m edge at structural corner `end`."""
    sl = params.child_slot(rot, m)
    su, sv = sides[(tile_id, sl + 1)]
    if params.orient == 0:
        return su if end == m else sv
    return sv if end == m else su


def _edges_match(sides, params, tx, rx, mx, ty, ry, my) -> bool:
    """Children X and Y read the same edge from opposite sides."""
    sx = sides[(tx, params.child_slot(rx, mx) + 1)]
    sy = sides[(ty, params.child_slot(ry, my) + 1)]
    a, b = zero_first(sx[0]), zero_first(sx[1])
    c, e = zero_first(sy[0]), zero_first(sy[1])
    return (a, b) == (e, c)


def check_patch(d: PentagonDataset, rule: SubstitutionRule,
                params: PlacementParams = CANONICAL_PLACEMENT_PARAMS,
                _sides: dict = None) -> tuple:
    """All patch-consistency failures for one rule's child patch; () if clean.

    Internal checks: center/corner and corner/corner shared edges must be the
    same canonical collared edge read from opposite sides.  Boundary checks:
    each half of every parent edge must be re-read identically (after vertex
    transport) from the child covering it.
    """
    sides = _sides if _sides is not None else _sides_cache(d)
    center = rule.children[0]
    at = {params.corner_of_position(k): rule.children[k] for k in range(1, 6)}
    rp = params.rot_peripheral
    failures = []
    for c in range(5):
        if not _edges_match(sides, params, center, params.rot_center, (c - 1) % 5,
                            at[c], rp[c], 3):
            failures.append({
                "kind": "internal", "rule": rule.parent,
                "cells": [["center", center], ["corner", c, at[c]]],
                "detail": f"center child {center} and corner-{c} child {at[c]} "
                          f"disagree on their shared edge",
            })
        if not _edges_match(sides, params, at[c], rp[c], 2,
                            at[(c + 1) % 5], rp[(c + 1) % 5], 4):
            failures.append({
                "kind": "internal", "rule": rule.parent,
                "cells": [["corner", c, at[c]], ["corner", (c + 1) % 5, at[(c + 1) % 5]]],
                "detail": f"corner-{c} child {at[c]} and corner-{(c + 1) % 5} child "
                          f"{at[(c + 1) % 5]} disagree on their shared edge",
            })
    transport = params.vertex_transport()
    parent_tile = d.tile(rule.parent)
    for s in range(5):
        pu, pv = sides[(parent_tile.id, s + 1)]
        got_first = _structural_side(sides, params, at[s], rp[s], 1, 1)
        want_first = tuple(transport[x] for x in pu)
        if zero_first(got_first) != zero_first(want_first):
            failures.append({
                "kind": "boundary", "rule": rule.parent, "slot": s + 1, "half": 1,
                "detail": f"first half of parent slot {s + 1}: child {at[s]} side "
                          f"{got_first} does not match collar side {want_first}",
            })
        got_second = _structural_side(sides, params, at[(s + 1) % 5],
                                      rp[(s + 1) % 5], 0, 1)
        want_second = tuple(transport[x] for x in pv)
        if zero_first(got_second) != zero_first(want_second):
            failures.append({
                "kind": "boundary", "rule": rule.parent, "slot": s + 1, "half": 2,
                "detail": f"second half of parent slot {s + 1}: child "
                          f"{at[(s + 1) % 5]} side {got_second} does not match "
                          f"collar side {want_second}",
            })
    return tuple(failures)


def derive_placement(d: PentagonDataset = None) -> Placement:
    """Search every global placement convention; return the consistent one.

    Raises PlacementError when nothing fits (e.g. a corrupted rule set).  If
    several conventions fit, the first in search order is taken and the
    ambiguity is logged and recorded on the result.
    """
    if d is None:
        d = load_dataset()
    sides = _sides_cache(d)
    solutions = []
    for orient, offset, direction in itertools.product((0, 1), range(5), (1, -1)):
        def corner_of_position(k):
            return (offset + direction * (k - 1)) % 5

        placements = []
        for rule in d.rules:
            at = {corner_of_position(k): rule.children[k] for k in range(1, 6)}
            placements.append((rule, at))

        for rot_center in range(5):
            trial = PlacementParams(orient, offset, direction, rot_center, ())

            def extend(pos, rots):
                if pos == 5:
                    params = PlacementParams(orient, offset, direction,
                                             rot_center, tuple(rots))
                    if all(not check_patch(d, rule, params, _sides=sides)
                           for rule in d.rules):
                        solutions.append(params)
                    return
                for r in range(5):
                    ok = True
                    for rule, at in placements:
                        if not _edges_match(sides, trial, rule.children[0],
                                            rot_center, (pos - 1) % 5, at[pos], r, 3):
                            ok = False
                            break
                        if pos >= 1 and not _edges_match(
                                sides, trial, at[pos - 1], rots[pos - 1], 2,
                                at[pos], r, 4):
                            ok = False
                            break
                    if ok:
                        extend(pos + 1, rots + [r])

            extend(0, [])
    if not solutions:
        raise PlacementError(
            "no consistent child placement exists for this rule set")
    if len(solutions) > 1:
        log.warning("placement search found %d consistent conventions; "
                    "taking the first", len(solutions))
    return Placement(params=solutions[0], solutions=tuple(solutions))


def canonical_placement(d: PentagonDataset = None) -> Placement:
    """The frozen placement convention, re-verified against the dataset."""
    if d is None:
        d = load_dataset()
    params = CANONICAL_PLACEMENT_PARAMS
    sides = _sides_cache(d)
    for rule in d.rules:
        failures = check_patch(d, rule, params, _sides=sides)
        if failures:
            raise PlacementError(
                f"frozen placement convention fails on rule {rule.parent}: "
                f"{failures[0]['detail']}")
    return Placement(params=params, solutions=(params,))


@dataclass(frozen=True)
class CWComplex:
    """A finite CW-complex given by integer boundary matrices.

    boundary2 is edge_count x face_count, boundary1 is vertex_count x
    edge_count; a 1D complex simply has face_count 0.  Cells are indexed from
    0 in matrix positions; dataset ids are matrix index + 1.
    """

    face_count: int
    edge_count: int
    vertex_count: int
    boundary2: tuple
    boundary1: tuple

    def __post_init__(self):
        object.__setattr__(self, "boundary2", freeze(self.boundary2))
        object.__setattr__(self, "boundary1", freeze(self.boundary1))
        r2, c2 = shape(self.boundary2)
        if self.face_count:
            if (r2, c2) != (self.edge_count, self.face_count):
                raise ComplexError(
                    f"boundary2 must be {self.edge_count}x{self.face_count}, "
                    f"got {r2}x{c2}")
        elif c2 != 0:
            raise ComplexError("boundary2 must have no columns when face_count is 0")
        r1, c1 = shape(self.boundary1)
        if self.vertex_count:
            if (r1, c1) != (self.vertex_count, self.edge_count):
                raise ComplexError(
                    f"boundary1 must be {self.vertex_count}x{self.edge_count}, "
                    f"got {r1}x{c1}")
        elif r1 != 0:
            raise ComplexError("boundary1 must have no rows when vertex_count is 0")
        if self.face_count and self.edge_count and self.vertex_count:
            if not is_zero(matmul(self.boundary1, self.boundary2)):
                raise ComplexError("boundary1 . boundary2 is nonzero")


@dataclass(frozen=True)
class ChainMaps:
    """Cellular chain maps induced by one round of substitution.

    Row t of s2 is the child multiset of face t; row e of s1 lists the signed
    child edges covering edge e; s0 maps each vertex to its image vertex.
    """

    s2: tuple
    s1: tuple
    s0: tuple

    def __post_init__(self):
        object.__setattr__(self, "s2", freeze(self.s2))
        object.__setattr__(self, "s1", freeze(self.s1))
        object.__setattr__(self, "s0", freeze(self.s0))


def euler_characteristic(c: CWComplex) -> int:
    return c.face_count - c.edge_count + c.vertex_count


def connectivity(c: CWComplex) -> int:
    """Number of connected components of the 1-skeleton."""
    if c.vertex_count == 0:
        return 0
    parent = list(range(c.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for j in range(c.edge_count):
        ends = [i for i in range(c.vertex_count) if c.boundary1[i][j] != 0]
        for a, b in zip(ends, ends[1:]):
            parent[find(a)] = find(b)
    return len({find(i) for i in range(c.vertex_count)})


def _edge_ids(d: PentagonDataset) -> dict:
    return {e.sides: e.id for e in d.edges}


def _vertex_ids(d: PentagonDataset) -> dict:
    return {v.decos: v.id for v in d.vertices}


def _slot_edge_sign(sides, edge_ids, tile_id, slot):
    """Canonical edge id at (tile, slot) and the sign of the slot walk."""
    raw = sides[(tile_id, slot)]
    walked = (zero_first(raw[0]), zero_first(raw[1]))
    ce = canonicalize_edge(raw)
    return edge_ids[ce.sides], 1 if walked == ce.sides else -1


def build_complex(d: PentagonDataset = None, placement: Placement = None) -> CWComplex:
    """Boundary matrices of the quotient complex.

    The placement argument is accepted for interface symmetry with
    chain_maps; the boundary data itself does not depend on it.
    """
    if d is None:
        d = load_dataset()
    del placement
    n2, n1, n0 = len(d.tiles), len(d.edges), len(d.vertices)
    edge_ids = _edge_ids(d)
    vert_ids = _vertex_ids(d)
    sides = _sides_cache(d)
    b2 = [[0] * n2 for _ in range(n1)]
    for t in d.tiles:
        for slot in range(1, 6):
            eid, sign = _slot_edge_sign(sides, edge_ids, t.id, slot)
            b2[eid - 1][t.id - 1] += sign
    b1 = [[0] * n1 for _ in range(n0)]
    for e in d.edges:
        tail = vert_ids[vertex_from_side(e.side_a).decos]
        head = vert_ids[vertex_from_side(e.side_b).decos]
        if tail != head:
            b1[head - 1][e.id - 1] += 1
            b1[tail - 1][e.id - 1] -= 1
    try:
        return CWComplex(face_count=n2, edge_count=n1, vertex_count=n0,
                         boundary2=b2, boundary1=b1)
    except ComplexError as exc:
        raise ComplexError(f"orientation derivation failed: {exc}") from exc


def subdivided_edge(d, placement, tile_id, slot, depth):
    """Ordered (tile, slot) pairs at `depth` subdivisions along one edge.

    The walk direction is the parent's own slot walk (low corner to high), so
    depth k yields 2**k half-edges.
    """
    if depth == 0:
        return [(tile_id, slot)]
    first, second = placement.edge_cover(d.rule(tile_id), slot)
    return (subdivided_edge(d, placement, first[0], first[1], depth - 1)
            + subdivided_edge(d, placement, second[0], second[1], depth - 1))


def _descendants(d, tile_id, depth):
    out = [tile_id]
    for _ in range(depth):
        out = [c for t in out for c in d.rule(t).children]
    return out


def chain_maps(d: PentagonDataset = None, placement: Placement = None,
               power: int = 1) -> ChainMaps:
    """Chain maps of `power` rounds of substitution (power 1 is one round).

    S1 rows are derived from a representative (tile, slot) per edge and
    re-checked against every other representative; a disagreement means the
    placement convention is inconsistent and raises ChainMapError.
    """
    if d is None:
        d = load_dataset()
    if placement is None:
        placement = canonical_placement(d)
    n2, n1, n0 = len(d.tiles), len(d.edges), len(d.vertices)
    edge_ids = _edge_ids(d)
    vert_ids = _vertex_ids(d)
    sides = _sides_cache(d)
    s2 = [[0] * n2 for _ in range(n2)]
    for rule in d.rules:
        for c in _descendants(d, rule.parent, power):
            s2[rule.parent - 1][c - 1] += 1

    def signed_row(tile_id, slot):
        eid, sign = _slot_edge_sign(sides, edge_ids, tile_id, slot)
        halves = []
        for cid, sl in subdivided_edge(d, placement, tile_id, slot, power):
            halves.append(_slot_edge_sign(sides, edge_ids, cid, sl))
        if sign < 0:
            halves = [(i, -g) for (i, g) in reversed(halves)]
        row = [0] * n1
        for i, g in halves:
            row[i - 1] += g
        return eid, row

    s1 = [None] * n1
    witness = {}
    for t in d.tiles:
        for slot in range(1, 6):
            eid, row = signed_row(t.id, slot)
            if s1[eid - 1] is None:
                s1[eid - 1] = row
                witness[eid] = (t.id, slot)
            elif s1[eid - 1] != row:
                raise ChainMapError(
                    f"edge {eid}: representatives {witness[eid]} and "
                    f"({t.id}, {slot}) disagree on the subdivided edge row")
    if any(row is None for row in s1):
        missing = [i + 1 for i, row in enumerate(s1) if row is None]
        raise ChainMapError(f"edges never read from any tile slot: {missing}")

    transport = placement.params.vertex_transport()
    s0 = [[0] * n0 for _ in range(n0)]
    for v in d.vertices:
        img = v.decos
        for _ in range(power):
            img = tuple(transport[x] for x in img)
        target = vert_ids[canonicalize_vertex(img).decos]
        s0[v.id - 1][target - 1] += 1
    maps = ChainMaps(s2=s2, s1=s1, s0=s0)
    check_commutation(build_complex(d), maps)
    return maps


def check_commutation(c: CWComplex, m: ChainMaps) -> None:
    """Assert the chain-map commutation identities, exactly over Z.

    The face/edge identity is skipped for 1D complexes (no faces).
    """
    if not c.face_count:
        lhs1 = matmul(c.boundary1, transpose(m.s1))
        rhs1 = matmul(transpose(m.s0), c.boundary1)
        if lhs1 != rhs1:
            raise ChainMapError("edge/vertex commutation fails")
        return
    lhs2 = matmul(c.boundary2, transpose(m.s2))
    rhs2 = matmul(transpose(m.s1), c.boundary2)
    if lhs2 != rhs2:
        bad = next((i, j) for i in range(len(lhs2))
                   for j in range(len(lhs2[0])) if lhs2[i][j] != rhs2[i][j])
        raise ChainMapError(
            f"face/edge commutation fails at edge {bad[0] + 1}, face {bad[1] + 1}")
    lhs1 = matmul(c.boundary1, transpose(m.s1))
    rhs1 = matmul(transpose(m.s0), c.boundary1)
    if lhs1 != rhs1:
        bad = next((i, j) for i in range(len(lhs1))
                   for j in range(len(lhs1[0])) if lhs1[i][j] != rhs1[i][j])
        raise ChainMapError(
            f"edge/vertex commutation fails at vertex {bad[0] + 1}, "
            f"edge {bad[1] + 1}")


def complex_to_dict(c: CWComplex, m: ChainMaps = None) -> dict:
    out = {
        "faces": c.face_count,
        "edges": c.edge_count,
        "vertices": c.vertex_count,
        "boundary2": [list(r) for r in c.boundary2],
        "boundary1": [list(r) for r in c.boundary1],
    }
    if m is not None:
        out["S2"] = [list(r) for r in m.s2]
        out["S1"] = [list(r) for r in m.s1]
        out["S0"] = [list(r) for r in m.s0]
    return out


def canonical_loop_vertices(d: PentagonDataset) -> dict:
    """0-based edge index -> 0-based vertex index for every loop edge."""
    vert_ids = _vertex_ids(d)
    out = {}
    for e in d.edges:
        va, vb = vertices_from_edge(e)
        if va == vb:
            out[e.id - 1] = vert_ids[va.decos] - 1
    return out


def export_dot(c: CWComplex, faces: bool = False, loop_vertices: dict = None) -> str:
    """Deterministic DOT text for the 1-skeleton.

    Vertices become nodes v1..vN and every edge a directed arrow (tail to
    head) labeled e1..eM.  A loop edge has a zero boundary column, so its
    anchor vertex is not recoverable from the matrices; pass loop_vertices
    (edge index -> vertex index, see canonical_loop_vertices) to place such
    edges, else they anchor at v1.  With faces=True, one box node per face is
    added, linked by dashed lines to the distinct vertices on its boundary.
    """
    loop_vertices = loop_vertices or {}

    def endpoints(j):
        ends = [i for i in range(c.vertex_count) if c.boundary1[i][j] != 0]
        if not ends:
            at = loop_vertices.get(j, 0)
            return at, at
        tail = next(i for i in ends if c.boundary1[i][j] < 0)
        head = next(i for i in ends if c.boundary1[i][j] > 0)
        return tail, head

    lines = ["digraph tilespace {"]
    for i in range(c.vertex_count):
        lines.append(f'  v{i + 1} [label="v{i + 1}"];')
    if faces:
        for j in range(c.face_count):
            lines.append(f'  f{j + 1} [label="f{j + 1}", shape=box];')
    for j in range(c.edge_count):
        tail, head = endpoints(j)
        lines.append(f'  v{tail + 1} -> v{head + 1} [label="e{j + 1}"];')
    if faces:
        for j in range(c.face_count):
            touched = set()
            for i in range(c.edge_count):
                if c.boundary2[i][j] != 0:
                    touched.update(endpoints(i))
            for v in sorted(touched):
                lines.append(f'  f{j + 1} -> v{v + 1} [style=dashed, arrowhead=none];')
    lines.append("}")
    return "\n".join(lines) + "\n"
