"""Small exact linear algebra over Q and Z."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm


def rref(rows):
    """Reduced row echelon form over Q; returns (matrix, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots, r = [], 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                fac = m[i][c]
                m[i] = [x - fac * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    return len(rref(rows)[1]) if rows else 0


def nullspace(rows, n: int) -> list[list[Fraction]]:
    """Basis of {x in Q^n : rows . x = 0}."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    m, pivots = rref(rows)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * n
        v[fcol] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -m[i][fcol]
        basis.append(v)
    return basis


def primitive(v) -> tuple[int, ...]:
    """Clear denominators and divide by the gcd: the primitive integer vector on the ray."""
    if all(type(x) is int for x in v):
        ints = list(v)
    else:
        fr = [Fraction(x) for x in v]
        den = lcm(*(x.denominator for x in fr)) if fr else 1
        ints = [int(x * den) for x in fr]
    g = gcd(*ints) if ints else 0
    if g == 0:
        raise ValueError("zero vector has no primitive multiple")
    return tuple(x // g for x in ints)


def det_int(rows) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    a = [list(map(int, r)) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            sw = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if sw is None:
                return 0
            a[k], a[sw] = a[sw], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def integer_kernel_basis(ell) -> list[tuple[int, ...]]:
    """Z-basis of {v in Z^n : ell . v = 0} for a nonzero integer vector ell.

    Column operations by a unimodular matrix U bring ell to (g, 0, ..., 0);
    the last n - 1 columns of U then span the kernel lattice.
    """
    n = len(ell)
    row = list(map(int, ell))
    U = [[int(i == j) for j in range(n)] for i in range(n)]

    def colop(dst, src, k):
        # col[dst] -= k * col[src]
        row[dst] -= k * row[src]
        for r in U:
            r[dst] -= k * r[src]

    def swap(i, j):
        row[i], row[j] = row[j], row[i]
        for r in U:
            r[i], r[j] = r[j], r[i]

    while any(row[1:]):
        nz = [i for i in range(n) if row[i]]
        piv = min(nz, key=lambda i: abs(row[i]))
        if piv != 0:
            swap(0, piv)
        for j in range(1, n):
            if row[j]:
                colop(j, 0, row[j] // row[0])
    return [tuple(U[i][j] for i in range(n)) for j in range(1, n)]
