"""Decorations and canonical forms for collared pentagon cells.

Every pentagon corner carries a decoration in 1..5, and the five corner values
of a tile always form a cyclic run x, x+1, ..., x+4 (mod 5, representatives
1..5, so 5+1 = 1).  The value 0 is not a decoration: it is a marker meaning
"the vertex here has degree 3", and it never takes part in cyclic arithmetic.

A collared tile is stored with its interior normalized to (1,2,3,4,5), so only
the 5 exterior groups of 3 values each remain explicit.  Collared edges carry
two sides of 4 values, collared vertices a cyclic 4-tuple (with a 0 slot for
degree-3 vertices).
"""

from __future__ import annotations

from dataclasses import dataclass


class TilespaceError(Exception):
    """Base class for all errors raised by this package."""


class DecorationError(TilespaceError, ValueError):
    pass


class MalformedTileError(TilespaceError, ValueError):
    pass


class MalformedEdgeError(TilespaceError, ValueError):
    pass


class MalformedVertexError(TilespaceError, ValueError):
    pass


def _check_decoration(v, allow_zero=False):
    if not isinstance(v, int) or isinstance(v, bool):
        raise DecorationError(f"decoration must be an int, got {v!r}")
    if v == 0 and allow_zero:
        return
    if not 1 <= v <= 5:
        raise DecorationError(f"decoration {v} out of range 1..5")


def succ(v: int) -> int:
    """Cyclic successor on 1..5 (succ(5) = 1).  0 is not arithmetic."""
    _check_decoration(v)
    return v % 5 + 1


def pred(v: int) -> int:
    """Cyclic predecessor on 1..5 (pred(1) = 5)."""
    _check_decoration(v)
    return (v - 2) % 5 + 1


def cyclic_open_interval(lo: int, hi: int) -> frozenset:
    """Values strictly between lo and hi, walking cyclically upward from lo.

    (2,4) -> {3}; (3,1) -> {4,5}; (1,2) -> empty.
    """
    _check_decoration(lo)
    _check_decoration(hi)
    out = set()
    v = succ(lo)
    while v != hi:
        if v == lo:
            break  # lo == hi walked all the way around
        out.add(v)
        v = succ(v)
    return frozenset(out)


@dataclass(frozen=True)
class CollaredTile:
    """A collared pentagon: interior (1,2,3,4,5) implicit, 5 exterior groups.

    Group s (1-based) belongs to the edge between interior corners s and s+1.
    Entries 1 and 2 of a group are neighbor-tile decorations (always 1..5),
    entry 3 is the diagonal decoration across the far corner of that edge,
    or 0 when that vertex has degree 3.
    """

    exterior: tuple
    id: int = 0

    def __post_init__(self):
        if len(self.exterior) != 5 or any(len(g) != 3 for g in self.exterior):
            raise MalformedTileError(
                f"exterior must be 5 groups of 3, got {self.exterior!r}")
        for g in self.exterior:
            _check_decoration(g[0])
            _check_decoration(g[1])
            _check_decoration(g[2], allow_zero=True)
        object.__setattr__(self, "exterior", tuple(tuple(g) for g in self.exterior))

    def group(self, s: int) -> tuple:
        """Exterior group for slot s, 1-based."""
        if not 1 <= s <= 5:
            raise MalformedTileError(f"slot {s} out of range 1..5")
        return self.exterior[s - 1]


def normalize_tile(interior, exterior) -> CollaredTile:
    """Rotate the exterior groups so that group 1 follows interior corner 1.

    The interior must be a cyclic run (x, x+1, x+2, x+3, x+4); anything else
    is malformed.  Decoration values are unchanged, only the group order moves.
    """
    interior = tuple(interior)
    if len(interior) != 5:
        raise MalformedTileError(f"interior must have 5 entries, got {interior!r}")
    for v in interior:
        _check_decoration(v)
    for i in range(4):
        if interior[i + 1] != succ(interior[i]):
            raise MalformedTileError(
                f"interior {interior} is not a cyclic run x, x+1, ..., x+4")
    k = interior.index(1)
    exterior = tuple(tuple(g) for g in exterior)
    return CollaredTile(exterior[k:] + exterior[:k])


def zero_first(side) -> tuple:
    """Order the middle pair of an edge side so a 0, if present, comes first.

    This is the representative chosen inside the middle-pair swap symmetry
    (the pair is swappable exactly when it contains a 0).
    """
    a, b, c, d = side
    if b == 0 or c == 0:
        lo, hi = sorted((b, c))
        return (a, lo, hi, d)
    return (a, b, c, d)


def _check_side(side):
    if len(side) != 4:
        raise MalformedEdgeError(f"edge side must have 4 entries, got {side!r}")
    _check_decoration(side[0])
    _check_decoration(side[1], allow_zero=True)
    _check_decoration(side[2], allow_zero=True)
    _check_decoration(side[3])


@dataclass(frozen=True)
class CollaredEdge:
    """A collared edge, stored in canonical form (see canonicalize_edge)."""

    side_a: tuple
    side_b: tuple
    id: int = 0

    def __post_init__(self):
        _check_side(self.side_a)
        _check_side(self.side_b)
        object.__setattr__(self, "side_a", tuple(self.side_a))
        object.__setattr__(self, "side_b", tuple(self.side_b))
        canon = _canonical_sides((self.side_a, self.side_b))
        if (self.side_a, self.side_b) != canon:
            raise MalformedEdgeError(
                f"edge {(self.side_a, self.side_b)} is not canonical; "
                f"canonical form is {canon}")

    @property
    def sides(self) -> tuple:
        return (self.side_a, self.side_b)

    def is_loop(self) -> bool:
        """Both endpoints are the same collared vertex."""
        return canonicalize_vertex(self.side_a) == canonicalize_vertex(self.side_b)


def _canonical_sides(raw):
    s1, s2 = zero_first(raw[0]), zero_first(raw[1])
    return min((s1, s2), (s2, s1))


def canonicalize_edge(raw) -> CollaredEdge:
    """Canonical representative of a raw two-sided edge tuple.

    The two symmetries are: swap the sides, and swap a side's middle pair when
    it contains a 0.  The canonical form is the lexicographic minimum of the
    orbit (flattened 8-tuple comparison).
    """
    a, b = raw
    _check_side(tuple(a))
    _check_side(tuple(b))
    s1, s2 = _canonical_sides((tuple(a), tuple(b)))
    return CollaredEdge(s1, s2)


def edge_orbit(raw) -> frozenset:
    """All raw tuples equivalent to `raw` under the two edge symmetries."""
    out = set()
    for a, b in ((tuple(raw[0]), tuple(raw[1])), (tuple(raw[1]), tuple(raw[0]))):
        for a2 in _middle_swaps(a):
            for b2 in _middle_swaps(b):
                out.add((a2, b2))
    return frozenset(out)


def _middle_swaps(side):
    a, b, c, d = side
    if b == 0 or c == 0:
        return ((a, b, c, d), (a, c, b, d))
    return ((a, b, c, d),)


@dataclass(frozen=True)
class CollaredVertex:
    """A collared vertex: cyclic 4-tuple, 0 in position 2 for degree 3."""

    decos: tuple
    id: int = 0

    def __post_init__(self):
        d = tuple(self.decos)
        if len(d) != 4:
            raise MalformedVertexError(f"vertex must have 4 entries, got {d!r}")
        _check_decoration(d[0])
        _check_decoration(d[1], allow_zero=True)
        _check_decoration(d[2])
        _check_decoration(d[3])
        object.__setattr__(self, "decos", d)
        if d != _canonical_vertex_tuple(d):
            raise MalformedVertexError(
                f"vertex {d} is not canonical; canonical form is "
                f"{_canonical_vertex_tuple(d)}")

    @property
    def degree(self) -> int:
        return 3 if 0 in self.decos else 4


def _canonical_vertex_tuple(cycle):
    cycle = tuple(cycle)
    if 0 in cycle:
        rest = tuple(v for v in cycle if v != 0)
        q = min(rest[i:] + rest[:i] for i in range(3))
        return (q[0], 0, q[1], q[2])
    return min(cycle[i:] + cycle[:i] for i in range(4))


def canonicalize_vertex(cycle) -> CollaredVertex:
    """Canonical representative of a cyclic 4-tuple read around a vertex.

    Rotations are the only symmetry.  For degree-3 vertices the 0 marker is
    pulled out, the remaining 3 values are min-rotated, and the 0 is put back
    in position 2.
    """
    cycle = tuple(cycle)
    if len(cycle) != 4:
        raise MalformedVertexError(f"vertex cycle must have 4 entries, got {cycle!r}")
    zeros = sum(1 for v in cycle if v == 0)
    if zeros > 1:
        raise MalformedVertexError(f"vertex cycle {cycle} has more than one 0")
    for v in cycle:
        _check_decoration(v, allow_zero=True)
    return CollaredVertex(_canonical_vertex_tuple(cycle))
