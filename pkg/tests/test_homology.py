import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from tilespace.apcomplex import ChainMaps, CWComplex, build_complex, chain_maps
from tilespace.homology import (AbelianGroup, HomologyError, cohomology,
                                direct_limit, hull_cohomology,
                                induced_endomorphisms, presentations,
                                smith_normal_form)
from tilespace.matrix import identity, matmul, shape

# hand-checkable fixtures ----------------------------------------------------

CIRCLE = CWComplex(face_count=0, edge_count=1, vertex_count=1,
                   boundary2=(), boundary1=((0,),))

# two disjoint triangles: vertices 1..3 and 4..6, edges chained cyclically
_TRI_B1 = (
    (-1, 0, 1, 0, 0, 0),
    (1, -1, 0, 0, 0, 0),
    (0, 1, -1, 0, 0, 0),
    (0, 0, 0, -1, 0, 1),
    (0, 0, 0, 1, -1, 0),
    (0, 0, 0, 0, 1, -1),
)
TRIANGLES = CWComplex(face_count=0, edge_count=6, vertex_count=6,
                      boundary2=(), boundary1=_TRI_B1)

# two discs glued along one loop edge at one vertex
SPHERELIKE = CWComplex(face_count=2, edge_count=1, vertex_count=1,
                       boundary2=((1, -1),), boundary1=((0,),))


def pretty(c):
    return [g.describe() for g in cohomology(c)]


def test_circle_cohomology():
    assert pretty(CIRCLE) == ["Z", "Z", "0"]


def test_two_triangles_cohomology():
    assert pretty(TRIANGLES) == ["Z^2", "Z^2", "0"]


def test_spherelike_cohomology():
    assert pretty(SPHERELIKE) == ["Z", "0", "Z"]


def test_pentagon_complex_cohomology(d):
    assert pretty(build_complex(d)) == ["Z", "Z^5", "Z^5 + (Z/2)^5"]


# abelian group bookkeeping --------------------------------------------------

def test_abelian_group_validation():
    assert AbelianGroup(2, (2, 4)).describe() == "Z^2 + Z/2 + Z/4"
    with pytest.raises(HomologyError):
        AbelianGroup(0, (3, 2))  # divisibility chain violated
    with pytest.raises(HomologyError):
        AbelianGroup(1, (1,))


def test_abelian_group_run_lengths():
    assert AbelianGroup(0, (2, 2, 2)).describe() == "(Z/2)^3"
    assert AbelianGroup(0, ()).describe() == "0"


# Smith normal form ----------------------------------------------------------

def test_snf_enforces_divisibility():
    result = smith_normal_form(((2, 0), (0, 3)))
    assert result.diagonal == (1, 6)


def check_snf(m):
    res = smith_normal_form(m)
    r, c = shape(m)
    assert matmul(matmul(res.u, m), res.v) == res.d
    diag = res.diagonal
    assert all(v >= 0 for v in diag)
    for i in range(len(diag) - 1):
        if diag[i + 1]:
            assert diag[i] != 0 and diag[i + 1] % diag[i] == 0
        # a zero may only be followed by zeros
        if diag[i] == 0:
            assert diag[i + 1] == 0
    from tilespace.matrix import bareiss_det
    assert bareiss_det(res.u) in (1, -1)
    assert bareiss_det(res.v) in (1, -1)
    return res


@given(st.integers(min_value=1, max_value=5).flatmap(
    lambda r: st.integers(min_value=1, max_value=5).flatmap(
        lambda c: st.lists(
            st.lists(st.integers(min_value=-9, max_value=9),
                     min_size=c, max_size=c),
            min_size=r, max_size=r).map(lambda rows: tuple(map(tuple, rows))))))
@settings(max_examples=60, deadline=None)
def test_snf_properties(m):
    check_snf(m)


def test_snf_empty_and_zero():
    assert smith_normal_form(((0, 0), (0, 0))).diagonal == (0, 0)


# induced endomorphisms ------------------------------------------------------

E2_ORACLE = (
    (2, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 2, 0, 0, 0, -1, -1, -1, 0, 0),
    (0, 0, 2, 0, 0, -1, -1, -1, 0, 0),
    (0, 0, 0, 2, 0, 0, -1, -1, -1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 2, 2, 2, 1, 1),
    (0, 0, 0, 0, 0, 0, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 2, 3, 1, 1),
    (0, 0, 0, 0, 0, 1, 2, 2, 2, 1),
    (0, 0, 0, 0, 0, 1, 2, 2, 1, 2),
)


def test_induced_endomorphisms_on_pentagon(d):
    c = build_complex(d)
    e0, e1, e2 = induced_endomorphisms(c, chain_maps(d))
    assert e0.matrix == ((1,),)
    assert e1.matrix == tuple((0,) * 5 for _ in range(5))
    assert e2.moduli == (2, 2, 2, 2, 2, 0, 0, 0, 0, 0)
    assert e2.matrix == E2_ORACLE


def test_identity_maps_induce_identities(d):
    c = build_complex(d)
    ident = ChainMaps(s2=identity(36), s1=identity(45), s0=identity(10))
    for e in induced_endomorphisms(c, ident):
        n = len(e.matrix)
        assert e.reduced() == tuple(
            tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def test_square_induces_square(d):
    c = build_complex(d)
    once = induced_endomorphisms(c, chain_maps(d))
    twice = induced_endomorphisms(c, chain_maps(d, power=2))
    for e1, e2 in zip(once, twice):
        squared = type(e1)(degree=e1.degree, group=e1.group, moduli=e1.moduli,
                           matrix=matmul(e1.matrix, e1.matrix))
        assert squared.reduced() == e2.reduced()


def test_free_block_charpoly_roots(d):
    # the free part of the degree-2 map has eigenvalue 6 (and 1 four times)
    from tilespace.matrix import bareiss_det
    c = build_complex(d)
    _, _, e2 = induced_endomorphisms(c, chain_maps(d))
    free = e2.free_block()
    for lam, mult in ((6, 1), (1, 4)):
        shifted = tuple(tuple(free[i][j] - (lam if i == j else 0)
                              for j in range(5)) for i in range(5))
        assert bareiss_det(shifted) == 0, (lam, mult)


# direct limits --------------------------------------------------------------

def test_direct_limit_doubling():
    res = direct_limit(AbelianGroup(1), ((2,),))
    assert res.rationalDim == 1
    assert res.stabilizationIndex == 1
    assert res.integralReport["snfDiagonal"] == [2]
    assert res.integralReport["denominatorPrimes"] == [2]
    assert res.integralReport["surjectiveFreePart"] is False


def test_direct_limit_identity():
    res = direct_limit(AbelianGroup(2), identity(2))
    assert res.rationalDim == 2
    assert res.stabilizationIndex == 1
    assert res.integralReport["surjectiveFreePart"] is True


def test_direct_limit_nilpotent():
    res = direct_limit(AbelianGroup(1), ((0,),))
    assert res.rationalDim == 0
    assert res.stabilizationIndex == 1


def test_direct_limit_rank_drop_then_stabilize():
    m = ((1, 0), (0, 0))
    res = direct_limit(AbelianGroup(2), m)
    assert res.rationalDim == 1


def test_direct_limit_torsion_dies():
    g = AbelianGroup(0, (2,))
    res = direct_limit(g, ((2,),))
    assert res.rationalDim == 0
    assert res.integralReport["torsionLimitOrder"] == 1


def test_direct_limit_torsion_survives():
    g = AbelianGroup(0, (2,))
    res = direct_limit(g, ((1,),))
    assert res.integralReport["torsionLimitOrder"] == 2


def test_rational_dim_is_rank_of_stable_power(d):
    # cross-check against fraction-free Gaussian elimination
    c = build_complex(d)
    _, _, e2 = induced_endomorphisms(c, chain_maps(d))
    free = e2.free_block()
    res = direct_limit(e2.group, e2.matrix)
    rows = [[Fraction(v) for v in row] for row in free]
    rank = 0
    for col in range(5):
        piv = next((r for r in range(rank, 5) if rows[r][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        for r in range(5):
            if r != rank and rows[r][col]:
                f = rows[r][col] / rows[rank][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    assert res.rationalDim == rank


# full pipeline --------------------------------------------------------------

def test_hull_cohomology_report(d):
    report = hull_cohomology(d)
    assert report["cohomology"]["H0"]["pretty"] == "Z"
    assert report["cohomology"]["H1"]["pretty"] == "Z^5"
    assert report["cohomology"]["H2"]["pretty"] == "Z^5 + (Z/2)^5"
    assert report["limits"]["H0"]["rationalDim"] == 1
    assert report["limits"]["H1"]["rationalDim"] == 0
    assert report["limits"]["H2"]["rationalDim"] == 5
    h2 = report["limits"]["H2"]["integralReport"]
    assert h2["snfDiagonal"] == [1, 1, 1, 1, 6]
    assert h2["denominatorPrimes"] == [2, 3]
    assert h2["torsionLimitOrder"] == 1
    assert all(c["passed"] for c in report["checks"])
    names = {c["name"] for c in report["checks"]}
    assert "chain-map-commutation" in names
    assert "induced-square-H2" in names


def test_hull_cohomology_is_deterministic(d):
    import json
    a = json.dumps(hull_cohomology(d), sort_keys=True)
    b = json.dumps(hull_cohomology(d), sort_keys=True)
    assert a == b


def test_presentations_do_not_mix_torsion_and_free(d):
    _, _, p2 = presentations(build_complex(d))
    assert len(p2.torsion_idx) == 5
    assert len(p2.free_idx) == 5


def test_random_small_complex_euler_identity():
    # chi from cell counts must match the cohomology ranks for any 1D complex
    rng = random.Random(5)
    for _ in range(10):
        nv = rng.randint(1, 4)
        ne = rng.randint(0, 5)
        b1 = []
        for _ in range(nv):
            b1.append([0] * ne)
        for j in range(ne):
            a, b = rng.randrange(nv), rng.randrange(nv)
            if a != b:
                b1[a][j] -= 1
                b1[b][j] += 1
        c = CWComplex(face_count=0, edge_count=ne, vertex_count=nv,
                      boundary2=(), boundary1=tuple(map(tuple, b1)))
        h0, h1, h2 = cohomology(c)
        assert h0.rank - h1.rank == nv - ne
        assert h2.describe() == "0"
