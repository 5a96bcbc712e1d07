"""Exact integer cohomology machinery and the inverse-limit computation.

Everything here runs on arbitrary-precision integers (fractions only inside
linear solves, asserted integral afterwards); no floating point, so results
are exact and reproducible.  The chain of tools: Smith normal form, cellular
cohomology of a CWComplex, the endomorphisms the substitution induces on each
cohomology group, and the direct limit of the resulting sequence, which is the
cohomology of the space of infinite substitution threads.
"""

from __future__ import annotations

from dataclasses import dataclass

from .apcomplex import (
    CWComplex,
    ChainMaps,
    build_complex,
    canonical_placement,
    chain_maps,
    check_commutation,
    connectivity,
    euler_characteristic,
)
from .core import TilespaceError
from .dataset import PentagonDataset, load_dataset, validate_dataset
from .matrix import (
    bareiss_det,
    freeze,
    identity,
    matmul,
    matpow,
    rank,
    shape,
    solve_exact,
    transpose,
)


class HomologyError(TilespaceError):
    pass


@dataclass(frozen=True)
class AbelianGroup:
    """Z^rank plus cyclic factors Z/d1 + Z/d2 + ... with d1 | d2 | ..."""

    rank: int
    torsion: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(d) for d in self.torsion))
        if self.rank < 0:
            raise HomologyError(f"negative rank {self.rank}")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a != 0:
                raise HomologyError(f"torsion {self.torsion} breaks divisibility")
        if any(d < 2 for d in self.torsion):
            raise HomologyError(f"torsion divisors must be >= 2, got {self.torsion}")

    def describe(self) -> str:
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        for d, count in _run_lengths(self.torsion):
            parts.append(f"Z/{d}" if count == 1 else f"(Z/{d})^{count}")
        return " + ".join(parts) if parts else "0"

    def to_dict(self) -> dict:
        return {"rank": self.rank, "torsion": list(self.torsion),
                "pretty": self.describe()}


def _run_lengths(seq):
    out = []
    for x in seq:
        if out and out[-1][0] == x:
            out[-1][1] += 1
        else:
            out.append([x, 1])
    return [(a, b) for a, b in out]


@dataclass(frozen=True)
class SNFResult:
    """U.M.V = D with U, V unimodular and D diagonal, d1 | d2 | ..."""

    u: tuple
    d: tuple
    v: tuple

    @property
    def diagonal(self) -> tuple:
        r, c = shape(self.d)
        return tuple(self.d[i][i] for i in range(min(r, c)))

    @property
    def divisors(self) -> tuple:
        """The nonzero diagonal entries (the invariant factors)."""
        return tuple(x for x in self.diagonal if x != 0)

    @property
    def rank(self) -> int:
        return len(self.divisors)


def smith_normal_form(m) -> SNFResult:
    """Exact Smith normal form over Z.

    Returns U, D, V with U.M.V = D, D diagonal with nonnegative entries and
    each entry dividing the next.  Standard pivoting on the smallest nonzero
    entry with a final divisibility sweep.
    """
    a = [[int(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    u = [[int(i == j) for j in range(rows)] for i in range(rows)]
    v = [[int(i == j) for j in range(cols)] for i in range(cols)]

    def row_sub(i, j, q):  # row i -= q * row j
        if q:
            a[i] = [x - q * y for x, y in zip(a[i], a[j])]
            u[i] = [x - q * y for x, y in zip(u[i], u[j])]

    def col_sub(i, j, q):  # col i -= q * col j
        if q:
            for r in a:
                r[i] -= q * r[j]
            for r in v:
                r[i] -= q * r[j]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    for t in range(min(rows, cols)):
        while True:
            piv = None
            best = None
            for i in range(t, rows):
                for j in range(t, cols):
                    x = abs(a[i][j])
                    if x and (best is None or x < best):
                        best, piv = x, (i, j)
            if piv is None:
                break
            row_swap(t, piv[0])
            col_swap(t, piv[1])
            if a[t][t] < 0:
                row_neg(t)
            dirty = False
            for i in range(t + 1, rows):
                q = a[i][t] // a[t][t]
                row_sub(i, t, q)
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, cols):
                q = a[t][j] // a[t][t]
                col_sub(j, t, q)
                if a[t][j]:
                    dirty = True
            if dirty:
                continue
            # pivot must divide the whole remaining block for the chain to hold
            offender = next(((i, j) for i in range(t + 1, rows)
                             for j in range(t + 1, cols)
                             if a[i][j] % a[t][t]), None)
            if offender is None:
                break
            row_sub(t, offender[0], -1)  # drag the bad row up, re-eliminate
        if t < min(rows, cols) and a[t][t] == 0:
            break
    d = [[a[i][j] if i == j else 0 for j in range(cols)] for i in range(rows)]
    for i in range(rows):
        for j in range(cols):
            if i != j and a[i][j]:
                raise HomologyError("Smith reduction left an off-diagonal entry")
    res = SNFResult(u=freeze(u), d=freeze(d), v=freeze(v))
    if matmul(matmul(res.u, freeze(m)), res.v) != res.d:
        raise HomologyError("Smith factorization check failed")
    return res


def _solve_integral(a, b, what: str):
    """Solve a.X = b, demanding an exact integral solution."""
    sol = solve_exact(a, b)
    if sol is None:
        raise HomologyError(f"{what}: inconsistent linear system")
    if matmul(a, tuple(tuple(x) for x in sol)) != freeze(b):
        raise HomologyError(f"{what}: residual after solve")
    if any(x.denominator != 1 for row in sol for x in row):
        raise HomologyError(f"{what}: solution is not integral")
    return tuple(tuple(int(x) for x in row) for row in sol)


@dataclass(frozen=True)
class _Presentation:
    """A subquotient ker/im of a cochain lattice, on an adapted basis.

    basis columns span the kernel; the image sublattice is spanned by
    divisors[i] * basis column i for i < len(divisors).  kept lists the basis
    indices surviving in the quotient (torsion generators first, then free).
    """

    basis: tuple
    divisors: tuple
    torsion_idx: tuple
    free_idx: tuple

    @property
    def kept(self) -> tuple:
        return self.torsion_idx + self.free_idx

    @property
    def group(self) -> AbelianGroup:
        return AbelianGroup(rank=len(self.free_idx),
                            torsion=tuple(self.divisors[i] for i in self.torsion_idx))

    @property
    def moduli(self) -> tuple:
        return tuple(self.divisors[i] for i in self.torsion_idx) + (0,) * len(self.free_idx)


def _kernel_basis(mat, ambient: int):
    """Columns spanning ker(mat) as a sublattice (saturated, via SNF)."""
    # a map with no target rows constrains nothing; the empty-tuple matrix
    # also drops its column count, so reconstruct from `ambient`
    if mat is None or shape(mat)[0] == 0:
        return identity(ambient)
    res = smith_normal_form(mat)
    r = res.rank
    v = res.v
    return tuple(tuple(v[i][j] for j in range(r, len(v[0]))) for i in range(len(v)))


def _present(kernel, image_map, what: str) -> _Presentation:
    """Present ker/im: express im(image_map) in kernel coordinates, adapt basis."""
    n, k = shape(kernel)
    if k == 0:
        return _Presentation(basis=kernel, divisors=(),
                             torsion_idx=(), free_idx=())
    if image_map is None or shape(image_map)[1] == 0:
        return _Presentation(basis=kernel, divisors=(),
                             torsion_idx=(), free_idx=tuple(range(k)))
    coords = _solve_integral(kernel, image_map, f"{what}: image inside kernel")
    res = smith_normal_form(coords)
    uc_inv = _solve_integral(res.u, identity(len(res.u)), f"{what}: basis change")
    adapted = matmul(kernel, uc_inv)
    divisors = res.divisors
    torsion_idx = tuple(i for i, d in enumerate(divisors) if d > 1)
    free_idx = tuple(range(len(divisors), k))
    return _Presentation(basis=adapted, divisors=divisors,
                         torsion_idx=torsion_idx, free_idx=free_idx)


def _coboundaries(c: CWComplex):
    """d0: C0 -> C1 and d1: C1 -> C2 as matrices on column vectors."""
    d0 = transpose(c.boundary1)
    d1 = transpose(c.boundary2) if c.face_count else None
    return d0, d1


def presentations(c: CWComplex) -> tuple:
    """Adapted presentations of H0, H1, H2 of the cochain complex."""
    d0, d1 = _coboundaries(c)
    p0 = _present(_kernel_basis(d0, c.vertex_count), None, "H0")
    p1 = _present(_kernel_basis(d1, c.edge_count), d0, "H1")
    if c.face_count:
        p2 = _present(identity(c.face_count), d1, "H2")
    else:
        p2 = _Presentation(basis=(), divisors=(), torsion_idx=(), free_idx=())
    return p0, p1, p2


def cohomology(c: CWComplex) -> tuple:
    """Integral cohomology (H0, H1, H2) of the complex."""
    return tuple(p.group for p in presentations(c))


@dataclass(frozen=True)
class InducedEndomorphism:
    """Endomorphism of one cohomology group on its presentation generators.

    Generators are ordered torsion first, then free; moduli[i] is the torsion
    order of generator i (0 for free generators).  matrix holds raw integer
    entries; entries in torsion rows are only meaningful modulo that row's
    modulus (see reduced()).
    """

    degree: int
    group: AbelianGroup
    moduli: tuple
    matrix: tuple

    def __post_init__(self):
        object.__setattr__(self, "matrix", freeze(self.matrix))
        n = len(self.moduli)
        if shape(self.matrix) != (n, n):
            raise HomologyError(
                f"induced matrix must be {n}x{n}, got {shape(self.matrix)}")

    @property
    def torsion_count(self) -> int:
        return sum(1 for m in self.moduli if m)

    def free_block(self) -> tuple:
        t = self.torsion_count
        return tuple(row[t:] for row in self.matrix[t:])

    def torsion_block(self) -> tuple:
        t = self.torsion_count
        return tuple(row[:t] for row in self.matrix[:t])

    def reduced(self) -> tuple:
        """Matrix with torsion rows reduced modulo their moduli."""
        out = []
        for i, row in enumerate(self.matrix):
            m = self.moduli[i]
            out.append(tuple(x % m if m else x for x in row))
        return tuple(out)

    def to_dict(self) -> dict:
        return {"degree": self.degree, "group": self.group.to_dict(),
                "moduli": list(self.moduli),
                "matrix": [list(r) for r in self.matrix]}


def _induced_on(p: _Presentation, cochain_map, degree: int) -> InducedEndomorphism:
    k = shape(p.basis)[1]
    if k == 0:
        return InducedEndomorphism(degree=degree, group=p.group, moduli=(), matrix=())
    image = matmul(cochain_map, p.basis)
    w = _solve_integral(p.basis, image, f"H{degree}: induced map on kernel")
    # the map must send the image sublattice into itself; in these coordinates
    # that forces zero blocks which make the quotient matrix well defined
    for i in p.free_idx:
        for j in range(len(p.divisors)):
            if w[i][j] != 0:
                raise HomologyError(
                    f"H{degree}: induced map leaks relation column {j} into "
                    f"free row {i}; quotient map undefined")
    for i in p.torsion_idx:
        for j in range(len(p.divisors)):
            lhs = w[i][j] * p.divisors[j]
            if lhs % p.divisors[i]:
                raise HomologyError(
                    f"H{degree}: induced map breaks torsion compatibility "
                    f"at ({i}, {j})")
    kept = p.kept
    mat = tuple(tuple(w[i][j] for j in kept) for i in kept)
    return InducedEndomorphism(degree=degree, group=p.group,
                               moduli=p.moduli, matrix=mat)


def induced_endomorphisms(c: CWComplex, m: ChainMaps) -> tuple:
    """Endomorphisms induced on (H0, H1, H2) by the substitution chain maps.

    The cochain maps are the S-matrices acting on column vectors of cochain
    coordinates; commutation with the coboundaries is re-checked first.
    """
    check_commutation(c, m)
    p0, p1, p2 = presentations(c)
    e0 = _induced_on(p0, m.s0, 0)
    e1 = _induced_on(p1, m.s1, 1)
    if c.face_count:
        e2 = _induced_on(p2, m.s2, 2)
    else:
        e2 = InducedEndomorphism(degree=2, group=p2.group, moduli=(), matrix=())
    return e0, e1, e2


@dataclass(frozen=True)
class DirectLimitResult:
    """Direct limit of G -M-> G -M-> ... for a finitely generated G."""

    rationalDim: int
    stabilizationIndex: int
    integralReport: dict

    def to_dict(self) -> dict:
        return {"rationalDim": self.rationalDim,
                "stabilizationIndex": self.stabilizationIndex,
                "integralReport": dict(self.integralReport)}


def _prime_factors(n: int) -> tuple:
    n = abs(int(n))
    out = set()
    p = 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return tuple(sorted(out))


def _subgroup_order(gens, moduli) -> int:
    """Order of the subgroup of prod Z/moduli generated by the given tuples."""
    seen = {tuple(0 for _ in moduli)}
    frontier = list(seen)
    gens = [tuple(g[i] % moduli[i] for i in range(len(moduli))) for g in gens]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return len(seen)


def direct_limit(group: AbelianGroup, matrix) -> DirectLimitResult:
    """Direct limit data of the system G -> G -> ... iterating one matrix.

    `matrix` acts on the presentation generators, torsion generators first
    (matching InducedEndomorphism.matrix).  The rational dimension is the
    eventual rank of the free block; the integral report carries the Smith
    data of the stabilized power (its invariant factors generate the
    localization denominators) and the fate of the torsion part, whose limit
    is the stable image subgroup.
    """
    matrix = freeze(matrix)
    t = len(group.torsion)
    f = group.rank
    if shape(matrix) != (t + f, t + f):
        raise HomologyError(
            f"endomorphism must be {(t + f)}x{(t + f)}, got {shape(matrix)}")
    free = tuple(row[t:] for row in matrix[t:])
    if f == 0:
        rational = 0
        stab = 1
        snf_diag = []
        denoms = ()
        surjective = True
    else:
        ranks = [rank(matpow(free, n)) for n in range(1, f + 2)]
        stab = next(n for n in range(1, f + 1) if ranks[n - 1] == ranks[n])
        rational = ranks[stab - 1]
        stabilized = matpow(free, stab)
        snf_diag = list(smith_normal_form(stabilized).diagonal)
        denoms = _prime_factors(
            _product(x for x in snf_diag if x))
        surjective = all(x in (0, 1) for x in snf_diag)
    torsion_orders = []
    if t:
        moduli = group.torsion
        power = identity(t + f)
        prev = None
        while True:
            power = matmul(power, matrix)
            gens = [tuple(power[i][j] for i in range(t)) for j in range(t)]
            order = _subgroup_order(gens, moduli)
            torsion_orders.append(order)
            if order == prev:
                break
            prev = order
    report = {
        "snfDiagonal": snf_diag,
        "denominatorPrimes": list(denoms),
        "surjectiveFreePart": surjective,
        "torsionImageOrders": torsion_orders,
        "torsionLimitOrder": torsion_orders[-1] if torsion_orders else 1,
    }
    return DirectLimitResult(rationalDim=rational, stabilizationIndex=stab,
                             integralReport=report)


def _product(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


def hull_cohomology(d: PentagonDataset = None) -> dict:
    """End-to-end report: dataset -> complex -> chain maps -> limits.

    Every intermediate consistency check is recorded; any hard failure raises
    instead of producing a partial report.
    """
    if d is None:
        d = load_dataset()
    checks = []

    def note(name, passed, detail=""):
        checks.append({"name": name, "passed": bool(passed), "detail": detail})
        if not passed:
            raise HomologyError(f"pipeline check failed: {name}: {detail}")

    validation = validate_dataset(d)
    note("dataset-validation", validation.passed,
         "; ".join(c.name for c in validation.checks if not c.passed))
    placement = canonical_placement(d)
    c = build_complex(d, placement)
    note("boundary-composition", True, "boundary1 . boundary2 = 0")
    chi = euler_characteristic(c)
    comp = connectivity(c)
    note("euler-characteristic", chi == 1, f"chi = {chi}")
    note("connectivity", comp == 1, f"{comp} component(s)")
    m = chain_maps(d, placement)
    note("chain-map-commutation", True, "both identities hold over Z")
    groups = cohomology(c)
    induced = induced_endomorphisms(c, m)
    m2 = chain_maps(d, placement, power=2)
    induced_sq = induced_endomorphisms(c, m2)
    for e1, e2 in zip(induced, induced_sq):
        lhs = e2.reduced()
        if e1.matrix:
            sq = matmul(e1.matrix, e1.matrix)
            rhs = InducedEndomorphism(e1.degree, e1.group, e1.moduli, sq).reduced()
        else:
            rhs = ()
        note(f"induced-square-H{e1.degree}", lhs == rhs,
             "square of induced map matches induced map of squared substitution")
    limits = [direct_limit(e.group, e.matrix) for e in induced]
    note("hull-H0-dimension", limits[0].rationalDim == 1,
         f"rational dimension {limits[0].rationalDim}")
    return {
        "complex": {
            "faces": c.face_count,
            "edges": c.edge_count,
            "vertices": c.vertex_count,
            "eulerCharacteristic": chi,
            "components": comp,
        },
        "cohomology": {f"H{i}": g.to_dict() for i, g in enumerate(groups)},
        "induced": {f"H{i}": e.to_dict() for i, e in enumerate(induced)},
        "limits": {f"H{i}": lim.to_dict() for i, lim in enumerate(limits)},
        "checks": checks,
    }
