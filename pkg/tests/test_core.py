import pytest
from hypothesis import given
from hypothesis import strategies as st

from tilespace.core import (CollaredEdge, CollaredTile, CollaredVertex,
                            DecorationError, MalformedEdgeError,
                            MalformedTileError, MalformedVertexError,
                            canonicalize_edge, canonicalize_vertex,
                            cyclic_open_interval, edge_orbit, normalize_tile,
                            pred, succ, zero_first)

DECOS = st.integers(min_value=1, max_value=5)
GROUPS = st.tuples(DECOS, DECOS, st.integers(min_value=0, max_value=5))
EXTERIORS = st.tuples(GROUPS, GROUPS, GROUPS, GROUPS, GROUPS)


def test_succ_wraps_at_five():
    assert [succ(v) for v in (1, 2, 3, 4, 5)] == [2, 3, 4, 5, 1]


def test_pred_inverts_succ():
    for v in range(1, 6):
        assert pred(succ(v)) == v
        assert succ(pred(v)) == v


@pytest.mark.parametrize("bad", [0, 6, -1, "3", 2.0, True])
def test_decoration_arithmetic_rejects_non_decorations(bad):
    with pytest.raises(DecorationError):
        succ(bad)
    with pytest.raises(DecorationError):
        pred(bad)


def test_cyclic_open_interval():
    assert cyclic_open_interval(2, 4) == {3}
    assert cyclic_open_interval(3, 1) == {4, 5}
    assert cyclic_open_interval(1, 2) == frozenset()
    # walking from a value back to itself covers everything else
    assert cyclic_open_interval(2, 2) == {3, 4, 5, 1}


def test_tile_exterior_is_validated():
    good = ((1, 2, 0),) * 5
    assert CollaredTile(good).group(1) == (1, 2, 0)
    with pytest.raises(MalformedTileError):
        CollaredTile(((1, 2, 0),) * 4)
    with pytest.raises(DecorationError):
        CollaredTile(((0, 2, 0),) + ((1, 2, 0),) * 4)  # 0 not allowed first


def test_group_accessor_is_one_based():
    t = CollaredTile(tuple((i, i, 0) for i in range(1, 6)))
    assert t.group(3) == (3, 3, 0)
    with pytest.raises(MalformedTileError):
        t.group(0)


@given(EXTERIORS, st.integers(min_value=1, max_value=5))
def test_normalize_tile_undoes_rotation(exterior, x):
    # reading the same tile starting from corner x permutes the groups
    interior = tuple((x - 1 + i) % 5 + 1 for i in range(5))
    rotated = exterior[x - 1:] + exterior[:x - 1]
    assert normalize_tile(interior, rotated) == CollaredTile(exterior)


def test_normalize_tile_rejects_non_runs():
    exterior = ((1, 2, 0),) * 5
    with pytest.raises(MalformedTileError):
        normalize_tile((1, 3, 2, 4, 5), exterior)
    with pytest.raises(MalformedTileError):
        normalize_tile((1, 2, 3, 4), exterior[:4])


def test_zero_first_swaps_only_zero_pairs():
    assert zero_first((3, 4, 0, 2)) == (3, 0, 4, 2)
    assert zero_first((3, 0, 4, 2)) == (3, 0, 4, 2)
    assert zero_first((3, 4, 1, 2)) == (3, 4, 1, 2)


def test_canonicalize_edge_is_orbit_minimum():
    raw = ((3, 4, 0, 2), (5, 1, 2, 4))
    e = canonicalize_edge(raw)
    orbit = edge_orbit(raw)
    assert e.sides == min(orbit)
    for member in orbit:
        assert canonicalize_edge(member) == e


def test_collared_edge_rejects_non_canonical_input():
    e = canonicalize_edge(((3, 4, 0, 2), (5, 1, 2, 4)))
    swapped = (e.side_b, e.side_a)
    if swapped != e.sides:
        with pytest.raises(MalformedEdgeError):
            CollaredEdge(*swapped)


def test_edge_loop_detection(d):
    loops = {e.id for e in d.edges if e.is_loop()}
    assert loops == {9, 16, 31, 34, 44}


def test_canonicalize_vertex_rotation_invariance():
    cycle = (2, 5, 3, 4)
    vs = {canonicalize_vertex(cycle[i:] + cycle[:i]) for i in range(4)}
    assert len(vs) == 1
    assert vs.pop().degree == 4


def test_degree3_vertex_puts_zero_second():
    v = canonicalize_vertex((5, 3, 0, 2))
    assert v.decos[1] == 0
    assert v.degree == 3
    assert v == canonicalize_vertex((3, 0, 2, 5))


def test_vertex_rejects_two_zeros():
    with pytest.raises(MalformedVertexError):
        canonicalize_vertex((1, 0, 0, 2))


def test_vertex_constructor_enforces_canonical_form():
    with pytest.raises(MalformedVertexError):
        CollaredVertex((5, 0, 3, 2))  # canonical form is (2, 0, 5, 3)
