"""Exact integer and rational linear algebra.

Matrices are sequences of rows; entries are Python ints (arbitrary
precision) or :class:`fractions.Fraction`.  Functions return tuples of
tuples so results are hashable and immutable.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Optional, Sequence

IntMatrix = Sequence[Sequence[int]]
Matrix = tuple[tuple[int, ...], ...]


class SingularMatrixError(ArithmeticError):
    """Raised when a square system has no unique solution."""


def _as_matrix(m) -> list[list]:
    rows = [list(r) for r in m]
    if rows and len({len(r) for r in rows}) != 1:
        raise ValueError("ragged matrix")
    return rows


def _freeze(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def shape(m) -> tuple[int, int]:
    rows = len(m)
    return rows, (len(m[0]) if rows else 0)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def transpose(m, ncols: Optional[int] = None) -> Matrix:
    """Transpose; ``ncols`` gives the column count when ``m`` has no rows."""
    if not m:
        return tuple(() for _ in range(ncols or 0))
    return tuple(zip(*m))


def matmul(a, b) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matvec(m, v) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in m)


def dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def primitive(v: Sequence[int]) -> tuple[int, ...]:
    """Divide an integer vector by the gcd of its entries."""
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        return tuple(v)
    return tuple(x // g for x in v)


def integralize(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Smallest positive multiple of a rational vector that is integral and primitive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    return primitive([int(Fraction(x) * den) for x in v])


def determinant(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination.

    Every intermediate division is exact, so only integers appear.
    """
    a = _as_matrix(m)
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def rank(m) -> int:
    """Rank over the rationals (fraction-free elimination)."""
    a = _as_matrix(m)
    if not a:
        return 0
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        for i in range(r + 1, nrows):
            f = a[i][c]
            if f:
                a[i] = [p * x - f * y for x, y in zip(a[i], a[r])]
                g = 0
                for x in a[i]:
                    g = gcd(g, x)
                if g > 1:
                    a[i] = [x // g for x in a[i]]
        r += 1
        if r == nrows:
            break
    return r


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over the rationals and the pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        if p != 1:
            a[r] = [x / p for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a, pivots


def nullspace(m, ncols: Optional[int] = None) -> list[tuple[int, ...]]:
    """Basis of the rational kernel ``{x : m x = 0}`` as primitive integer vectors.

    One vector per free column, in increasing free-column order.  ``ncols``
    is required when ``m`` has no rows.
    """
    if not m:
        n = ncols or 0
        return [tuple(int(i == j) for j in range(n)) for i in range(n)]
    n = len(m[0])
    red, pivots = rref(m)
    free = [c for c in range(n) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            v[pc] = -row[f]
        basis.append(integralize(v))
    return basis


def solve_rational(m, rhs) -> Optional[tuple[Fraction, ...]]:
    """Solve ``m x = rhs`` exactly.

    Returns ``None`` when the system is inconsistent.  A square singular
    ``m`` raises :class:`SingularMatrixError`; for non-square consistent
    systems the particular solution with all free variables zero is returned.
    """
    rows = _as_matrix(m)
    nrows, ncols = shape(rows)
    if len(rhs) != nrows:
        raise ValueError("right-hand side length does not match row count")
    if nrows == ncols and determinant(rows) == 0:
        raise SingularMatrixError("singular square system")
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x)


def inverse_rational(m) -> tuple[tuple[Fraction, ...], ...]:
    n = len(m)
    if determinant(m) == 0:
        raise SingularMatrixError("matrix is not invertible")
    aug = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(m)]
    red, _ = rref(aug)
    return tuple(tuple(row[n:]) for row in red)


def hermite_normal_form(m) -> Matrix:
    """Row-style Hermite normal form of the lattice spanned by the rows of ``m``.

    Zero rows are dropped; pivots are positive and entries above each pivot
    lie in ``[0, pivot)``.
    """
    a = _as_matrix(m)
    if not a:
        return ()
    nrows, ncols = len(a), len(a[0])
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if a[i][c] != 0]
            if not nz:
                break
            piv = min(nz, key=lambda i: (abs(a[i][c]), i))
            a[r], a[piv] = a[piv], a[r]
            p = a[r][c]
            done = True
            for i in range(r + 1, nrows):
                if a[i][c]:
                    q = a[i][c] // p
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
                    if a[i][c]:
                        done = False
            if done:
                break
        if r < nrows and a[r][c] != 0:
            if a[r][c] < 0:
                a[r] = [-x for x in a[r]]
            p = a[r][c]
            for i in range(r):
                q = a[i][c] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[r])]
            r += 1
            if r == nrows:
                break
    return _freeze(a[:r])


@dataclass(frozen=True)
class SnfResult:
    """``left @ A @ right == diag(diagonal, 0, ...)`` with unimodular transforms."""

    diagonal: tuple[int, ...]
    left: Matrix
    right: Matrix
    shape: tuple[int, int]

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    def diagonal_matrix(self) -> Matrix:
        nrows, ncols = self.shape
        return tuple(
            tuple(self.diagonal[i] if i == j and i < self.rank else 0 for j in range(ncols))
            for i in range(nrows)
        )


def smith_normal_form(m, ncols: Optional[int] = None) -> SnfResult:
    """Smith normal form with transforms.

    Pivot rule: smallest absolute nonzero entry of the remaining block,
    ties broken by lowest (row, column).  The diagonal is positive and
    satisfies ``d_1 | d_2 | ... | d_r``.
    """
    a = _as_matrix(m)
    nrows = len(a)
    nc = len(a[0]) if a else (ncols or 0)
    u = [list(r) for r in identity(nrows)]
    v = [list(r) for r in identity(nc)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in a:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, f):
        a[dst] = [x + f * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + f * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, f):
        for row in a:
            row[dst] += f * row[src]
        for row in v:
            row[dst] += f * row[src]

    t = 0
    while t < min(nrows, nc):
        while True:
            best = None
            for i in range(t, nrows):
                for j in range(t, nc):
                    x = a[i][j]
                    if x and (best is None or abs(x) < best[0]):
                        best = (abs(x), i, j)
            if best is None:
                break
            _, pi, pj = best
            if pi != t:
                swap_rows(t, pi)
            if pj != t:
                swap_cols(t, pj)
            if a[t][t] < 0:
                a[t] = [-x for x in a[t]]
                u[t] = [-x for x in u[t]]
            p = a[t][t]
            clean = True
            for i in range(t + 1, nrows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    clean = clean and a[i][t] == 0
            for j in range(t + 1, nc):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    clean = clean and a[t][j] == 0
            if not clean:
                continue
            bad = next(
                (i for i in range(t + 1, nrows) if any(a[i][j] % p for j in range(t + 1, nc))),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if best is None:
            break
        t += 1
    diag = tuple(a[i][i] for i in range(t))
    return SnfResult(diag, _freeze(u), _freeze(v), (nrows, nc))


def integer_kernel(m, ncols: Optional[int] = None) -> Matrix:
    """Lattice basis (rows, HNF) of ``{x in Z^n : m x = 0}``."""
    snf = smith_normal_form(m, ncols)
    n = snf.shape[1]
    cols = [[snf.right[i][j] for i in range(n)] for j in range(snf.rank, n)]
    return hermite_normal_form(cols) if cols else ()


def saturation(rows, ncols: int) -> Matrix:
    """Lattice basis (HNF) of ``span_Q(rows) ∩ Z^n``."""
    if rank(rows) == ncols:
        return identity(ncols)
    return integer_kernel(integer_kernel(rows, ncols), ncols)


def right_inverse(b) -> Matrix:
    """Integer ``C`` with ``b @ C == I`` for a primitive (saturated) row basis ``b``."""
    snf = smith_normal_form(b)
    r = len(b)
    if snf.diagonal != (1,) * r:
        raise ValueError("row basis is not primitive")
    v_cols = [row[:r] for row in snf.right]
    return matmul(v_cols, snf.left)
