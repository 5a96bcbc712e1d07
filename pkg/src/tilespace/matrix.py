"""Small exact integer matrix helpers used by the complex and homology code.

Matrices are immutable tuples of row tuples of Python ints, so every
computation is arbitrary-precision; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction


def freeze(rows) -> tuple:
    return tuple(tuple(int(x) for x in row) for row in rows)


def shape(m) -> tuple:
    return (len(m), len(m[0]) if m else 0)


def identity(n: int) -> tuple:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows: int, cols: int) -> tuple:
    return tuple((0,) * cols for _ in range(rows))


def transpose(m) -> tuple:
    rows, cols = shape(m)
    return tuple(tuple(m[i][j] for i in range(rows)) for j in range(cols))


def matmul(a, b) -> tuple:
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise ValueError(f"shape mismatch: {ra}x{ca} times {rb}x{cb}")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
        for row in a)


def matpow(m, k: int) -> tuple:
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("matrix power needs a square matrix")
    out = identity(n)
    base = freeze(m)
    while k:
        if k & 1:
            out = matmul(out, base)
        base = matmul(base, base)
        k >>= 1
    return out


def is_zero(m) -> bool:
    return all(x == 0 for row in m for x in row)


def rank(m) -> int:
    """Rank over the rationals by fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in m]
    rows, cols = shape(m)
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) // prev
            a[i][c] = 0
        prev = a[r][c]
        r += 1
        if r == rows:
            break
    return r


def bareiss_det(m) -> int:
    """Exact determinant by fraction-free elimination (integer matrices)."""
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if piv is None:
                return 0
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve_exact(a, b):
    """Solve a·X = b over the rationals; None when inconsistent.

    a is n x m, b is n x k; returns an m x k tuple of Fractions (a particular
    solution with free variables set to 0).
    """
    n, m = shape(a)
    nb, k = shape(b) if b and b[0] else (len(b), 0)
    if nb != n:
        raise ValueError("right-hand side row count mismatch")
    aug = [[Fraction(x) for x in row_a] + [Fraction(x) for x in row_b]
           for row_a, row_b in zip(a, b)]
    pivots = []
    r = 0
    for c in range(m):
        piv = next((i for i in range(r, n) if aug[i][c] != 0), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(n):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, n):
        if any(x != 0 for x in aug[i][m:]):
            return None
    x = [[Fraction(0)] * k for _ in range(m)]
    for row, c in enumerate(pivots):
        for j in range(k):
            x[c][j] = aug[row][m + j]
    return tuple(tuple(row) for row in x)
