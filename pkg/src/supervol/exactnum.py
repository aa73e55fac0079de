"""Exact rational linear algebra: Pfaffians and fixed-point invariants.

Matrices are plain sequences of sequences of values accepted by
``fractions.Fraction``; every routine returns exact rationals.  Sizes stay
in the dozens, so the algorithms favour simplicity over asymptotics
(dense storage, first-row Pfaffian expansion with memoization, fraction
Gaussian elimination).

The fixed-point invariant of an odd isomorphism acting on a (2n|2n)-
dimensional space is computed two ways:

* ``alpha_pfaffian`` -- the Pfaffian of Q01^T * Q10^(-1) in an adapted
  real basis;
* ``alpha_diagonal`` -- the closed product prod(c_i/d_i) for a diagonal
  complex action, after realification.

The two must agree on realified diagonal models; the test suite checks
this on random inputs.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Rational = Fraction

Matrix = tuple[tuple[Fraction, ...], ...]


def as_fraction(x) -> Fraction:
    """Coerce ints, strings like '3/4', and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input rejected: results must be exact")
    return Fraction(x)


def mat(rows) -> Matrix:
    """Normalize a matrix-like nested sequence to tuples of Fractions."""
    out = tuple(tuple(as_fraction(x) for x in row) for row in rows)
    if out and any(len(row) != len(out[0]) for row in out):
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def transpose(m) -> Matrix:
    m = mat(m)
    if not m:
        return m
    return tuple(tuple(m[i][j] for i in range(len(m))) for j in range(len(m[0])))


def mat_mul(a, b) -> Matrix:
    a, b = mat(a), mat(b)
    if a and b and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    bt = transpose(b)
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _echelon(rows: list[list[Fraction]]) -> tuple[int, Fraction]:
    """In-place row echelon; returns (rank, product of pivots with swap sign)."""
    sign = Fraction(1)
    prod = Fraction(1)
    rank = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if piv is None:
            continue
        if piv != rank:
            rows[rank], rows[piv] = rows[piv], rows[rank]
            sign = -sign
        prod *= rows[rank][col]
        for r in range(rank + 1, len(rows)):
            if rows[r][col] != 0:
                factor = rows[r][col] / rows[rank][col]
                for c in range(col, ncols):
                    rows[r][c] -= factor * rows[rank][c]
        rank += 1
    return rank, sign * prod


def rank(m) -> int:
    m = mat(m)
    if not m:
        return 0
    r, _ = _echelon([list(row) for row in m])
    return r


def det(m) -> Fraction:
    """Exact determinant by Gaussian elimination."""
    m = mat(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of non-square matrix")
    if n == 0:
        return Fraction(1)
    r, piv = _echelon([list(row) for row in m])
    return piv if r == n else Fraction(0)


def inverse(m) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination."""
    m = mat(m)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse of non-square matrix")
    aug = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_piv = 1 / aug[col][col]
        aug[col] = [x * inv_piv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def solve(a, b) -> tuple[Fraction, ...]:
    """Solve a x = b exactly for a consistent system with unique solution.

    ``a`` may be rectangular (more rows than columns); raises if the
    columns are dependent or the system is inconsistent.
    """
    a = mat(a)
    bvec = tuple(as_fraction(x) for x in b)
    if len(a) != len(bvec):
        raise ValueError("dimension mismatch")
    ncols = len(a[0]) if a else 0
    aug = [list(row) + [bv] for row, bv in zip(a, bvec)]
    row = 0
    pivots = []
    for col in range(ncols):
        piv = next((r for r in range(row, len(aug)) if aug[r][col] != 0), None)
        if piv is None:
            raise ValueError("simple roots dependent")
        aug[row], aug[piv] = aug[piv], aug[row]
        inv_piv = 1 / aug[row][col]
        aug[row] = [x * inv_piv for x in aug[row]]
        for r in range(len(aug)):
            if r != row and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[row])]
        pivots.append(col)
        row += 1
    for r in range(row, len(aug)):
        if aug[r][ncols] != 0:
            raise ValueError("inconsistent system")
    return tuple(aug[r][ncols] for r in range(ncols))


def is_skew(m) -> bool:
    m = mat(m)
    n = len(m)
    if any(len(row) != n for row in m):
        return False
    return all(m[i][j] == -m[j][i] for i in range(n) for j in range(i, n))


def pfaffian(m) -> Fraction:
    """Pfaffian of an even-sized skew-symmetric rational matrix.

    Sign convention: Pf([[0,1],[-1,0]]) = +1, and the Pfaffian of a
    direct sum of 2x2 blocks is the product of the block Pfaffians.
    Recursive expansion along the first remaining row, memoized on the
    surviving index set; exact at the sizes used here (<= 16).
    """
    m = mat(m)
    n = len(m)
    if n % 2 == 1:
        raise ValueError("Pfaffian undefined for odd dimension")
    if not is_skew(m):
        raise ValueError("matrix is not skew-symmetric")
    memo: dict[tuple[int, ...], Fraction] = {}

    def pf(idx: tuple[int, ...]) -> Fraction:
        if not idx:
            return Fraction(1)
        if idx in memo:
            return memo[idx]
        i = idx[0]
        rest = idx[1:]
        total = Fraction(0)
        for k, j in enumerate(rest):
            entry = m[i][j]
            if entry != 0:
                sub = rest[:k] + rest[k + 1:]
                term = entry * pf(sub)
                total += term if k % 2 == 0 else -term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def alpha_pfaffian(q01, q10) -> Fraction:
    """Fixed-point invariant from the matrix blocks of an odd isomorphism.

    ``q10`` is the even-to-odd block and ``q01`` the odd-to-even block in
    an adapted (realified, positively oriented) basis; the invariant is
    Pf(q01^T * q10^(-1)).  The product must come out skew-symmetric,
    which holds exactly when the basis is adapted to an invariant form.
    """
    q01, q10 = mat(q01), mat(q10)
    if det(q10) == 0:
        raise ValueError("Q does not act isomorphically")
    prod = mat_mul(transpose(q01), inverse(q10))
    if not is_skew(prod):
        raise ValueError("basis not adapted: Q01^T*Q10^(-1) is not skew-symmetric")
    return pfaffian(prod)


def alpha_diagonal(c: Sequence, d: Sequence) -> Fraction:
    """Closed form of the fixed-point invariant for a diagonal action.

    For an odd operator sending the i-th even basis vector to (1+i)*d_i
    times the i-th odd one and back with coefficient (1+i)*c_i, the
    invariant is prod(c_i / d_i).
    """
    cf = [as_fraction(x) for x in c]
    df = [as_fraction(x) for x in d]
    if len(cf) != len(df):
        raise ValueError("dimension mismatch")
    if any(x == 0 for x in df):
        raise ValueError("Q not invertible on V_0")
    out = Fraction(1)
    for ci, di in zip(cf, df):
        out *= ci / di
    return out


def realify(zmat) -> Matrix:
    """Realification of a complex matrix given as (re, im) pairs.

    Each entry z = x + iy becomes the 2x2 block [[x, -y], [y, x]], so an
    n x n complex matrix becomes a 2n x 2n rational one.  Transpose of
    the result equals the realification of the conjugate transpose.
    """
    rows = list(zmat)
    n = len(rows)
    out = [[Fraction(0)] * (2 * len(rows[0]) if n else 0) for _ in range(2 * n)]
    for i, row in enumerate(rows):
        for j, (re, im) in enumerate(row):
            re, im = as_fraction(re), as_fraction(im)
            out[2 * i][2 * j] = re
            out[2 * i][2 * j + 1] = -im
            out[2 * i + 1][2 * j] = im
            out[2 * i + 1][2 * j + 1] = re
    return tuple(tuple(row) for row in out)


def realified_diagonal_action(c: Sequence, d: Sequence) -> tuple[Matrix, Matrix]:
    """Blocks (q01, q10) of the realified diagonal model with weights c, d.

    The complex action is q10 = (1+i) diag(d), q01 = (1+i) diag(c); both
    blocks are returned realified, ready for :func:`alpha_pfaffian`.
    """
    n = len(c)
    if len(d) != n:
        raise ValueError("dimension mismatch")

    def diag_pairs(vals):
        return [
            [(vals[i], vals[i]) if i == j else (0, 0) for j in range(n)]
            for i in range(n)
        ]

    return realify(diag_pairs(list(c))), realify(diag_pairs(list(d)))
