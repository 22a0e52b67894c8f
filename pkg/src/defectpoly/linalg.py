"""Exact integer and rational linear algebra on plain Python lists.

Everything here works with arbitrary-precision ints and fractions.Fraction;
no floating point is ever involved.  Matrices are row-major lists of lists.
The routines are sized for the small dense systems that show up in lattice
polytope work (a few dozen rows at most), so clarity wins over asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Sequence

Matrix = list[list[int]]

__all__ = [
    "HermiteForm",
    "SmithForm",
    "det",
    "rank",
    "solve",
    "inverse",
    "inverse_unimodular",
    "hnf",
    "snf",
    "saturate",
    "primitive_vector",
    "primitive_direction",
    "identity",
    "mat_mul",
    "mat_vec",
    "transpose",
]


def _dims(a) -> tuple[int, int]:
    """Validated (rows, cols) of a rectangular matrix."""
    m = len(a)
    if m == 0:
        return 0, 0
    n = len(a[0])
    if any(len(row) != n for row in a):
        raise ValueError("matrix rows must all have the same length")
    return m, n


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(a):
    m, n = _dims(a)
    return [[a[i][j] for i in range(m)] for j in range(n)]


def mat_mul(a, b):
    ma, na = _dims(a)
    mb, nb = _dims(b)
    if na != mb:
        raise ValueError(f"cannot multiply {ma}x{na} by {mb}x{nb}")
    return [[sum(a[i][k] * b[k][j] for k in range(na)) for j in range(nb)] for i in range(ma)]


def mat_vec(a, v):
    m, n = _dims(a)
    if len(v) != n:
        raise ValueError("vector length does not match matrix width")
    return [sum(a[i][j] * v[j] for j in range(n)) for i in range(m)]


def det(a) -> int:
    """Determinant of a square integer matrix by fraction-free Bareiss elimination.

    The 0x0 determinant is 1 (empty product), which downstream code relies on
    for zero-dimensional edge cases.
    """
    m, n = _dims(a)
    if m != n:
        raise ValueError(f"determinant needs a square matrix, got {m}x{n}")
    if n == 0:
        return 1
    mat = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if mat[k][k] == 0:
            for i in range(k + 1, n):
                if mat[i][k] != 0:
                    mat[k], mat[i] = mat[i], mat[k]
                    sign = -sign
                    break
            else:
                return 0
        pk = mat[k][k]
        for i in range(k + 1, n):
            mik = mat[i][k]
            row_i = mat[i]
            row_k = mat[k]
            for j in range(k + 1, n):
                # exact division: the Bareiss identity keeps this integral
                row_i[j] = (row_i[j] * pk - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pk
    return sign * mat[n - 1][n - 1]


def rank(a) -> int:
    """Rank over the rationals, by Gaussian elimination with Fractions."""
    m, n = _dims(a)
    if m == 0 or n == 0:
        return 0
    rows = [[Fraction(x) for x in row] for row in a]
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        for i in range(r + 1, m):
            if rows[i][c] != 0:
                f = rows[i][c] / pv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return r


def solve(a, b) -> list[Fraction] | None:
    """One exact solution of A x = b, or None when the system is inconsistent.

    Underdetermined systems get free variables set to zero.
    """
    m, n = _dims(a)
    if len(b) != m:
        raise ValueError("right-hand side length does not match matrix height")
    aug = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(n):
        pivot = next((i for i in range(r, m) if aug[i][c] != 0), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append((r, c))
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, c in pivots:
        x[c] = aug[i][n]
    return x


def inverse(a) -> list[list[Fraction]]:
    """Exact inverse of a square matrix (Fractions); raises on singular input."""
    m, n = _dims(a)
    if m != n:
        raise ValueError("only square matrices can be inverted")
    aug = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(a)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        pv = aug[c][c]
        aug[c] = [x / pv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:] for row in aug]


def inverse_unimodular(a) -> Matrix:
    """Integer inverse of a unimodular integer matrix (|det| must be 1)."""
    if abs(det(a)) != 1:
        raise ValueError("matrix is not unimodular")
    inv = inverse(a)
    return [[int(x) for x in row] for row in inv]


def _row_addmul(mat, i, k, q):
    row_i = mat[i]
    row_k = mat[k]
    for j in range(len(row_i)):
        row_i[j] += q * row_k[j]


@dataclass(frozen=True)
class HermiteForm:
    """Row-style Hermite normal form H = U A with U unimodular."""

    h: Matrix
    u: Matrix


def hnf(a) -> HermiteForm:
    """Hermite normal form of an integer matrix.

    Row echelon over the integers: pivots positive, entries above a pivot
    reduced into [0, pivot), and U A = H with det(U) = +-1.
    """
    m, n = _dims(a)
    h = [list(map(int, row)) for row in a]
    u = identity(m)
    row = 0
    for col in range(n):
        if row == m:
            break
        # gcd elimination below the working row
        while True:
            nz = [i for i in range(row, m) if h[i][col] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][col]), i))
            if i0 != row:
                h[row], h[i0] = h[i0], h[row]
                u[row], u[i0] = u[i0], u[row]
            if len(nz) == 1:
                break
            p = h[row][col]
            for i in range(row + 1, m):
                if h[i][col] != 0:
                    q = h[i][col] // p
                    if q:
                        _row_addmul(h, i, row, -q)
                        _row_addmul(u, i, row, -q)
        if h[row][col] != 0:
            if h[row][col] < 0:
                h[row] = [-x for x in h[row]]
                u[row] = [-x for x in u[row]]
            p = h[row][col]
            for i in range(row):
                q = h[i][col] // p
                if q:
                    _row_addmul(h, i, row, -q)
                    _row_addmul(u, i, row, -q)
            row += 1
    return HermiteForm(h, u)


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


@dataclass(frozen=True)
class SmithForm:
    """Smith normal form S = U A V, S diagonal with a divisibility chain."""

    s: Matrix
    u: Matrix
    v: Matrix


def snf(a) -> SmithForm:
    """Smith normal form over the integers.

    Returns S, U, V with U A V = S, U and V unimodular, S diagonal with
    nonnegative entries d_1 | d_2 | ... (zeros trailing).
    """
    m, n = _dims(a)
    s = [list(map(int, row)) for row in a]
    u = identity(m)
    v = identity(n)

    def row_addmul(i, k, q):
        _row_addmul(s, i, k, q)
        _row_addmul(u, i, k, q)

    def col_addmul(j, k, q):
        for i in range(m):
            s[i][j] += q * s[i][k]
        for i in range(n):
            v[i][j] += q * v[i][k]

    def combine_rows(i1, i2, col):
        a1, a2 = s[i1][col], s[i2][col]
        g, x, y = _xgcd(a1, a2)
        a1g, a2g = a1 // g, a2 // g
        for mat in (s, u):
            r1, r2 = mat[i1], mat[i2]
            for j in range(len(r1)):
                t1, t2 = r1[j], r2[j]
                r1[j] = x * t1 + y * t2
                r2[j] = -a2g * t1 + a1g * t2

    def combine_cols(j1, j2, row):
        a1, a2 = s[row][j1], s[row][j2]
        g, x, y = _xgcd(a1, a2)
        a1g, a2g = a1 // g, a2 // g
        for i in range(m):
            t1, t2 = s[i][j1], s[i][j2]
            s[i][j1] = x * t1 + y * t2
            s[i][j2] = -a2g * t1 + a1g * t2
        for i in range(n):
            t1, t2 = v[i][j1], v[i][j2]
            v[i][j1] = x * t1 + y * t2
            v[i][j2] = -a2g * t1 + a1g * t2

    def clear_at(t):
        """Make row t and column t zero outside the pivot (t, t)."""
        while True:
            for i in range(t + 1, m):
                if s[i][t] != 0:
                    if s[i][t] % s[t][t] == 0:
                        row_addmul(i, t, -(s[i][t] // s[t][t]))
                    else:
                        combine_rows(t, i, t)
            if all(s[t][j] == 0 for j in range(t + 1, n)):
                if all(s[i][t] == 0 for i in range(t + 1, m)):
                    return
                continue
            for j in range(t + 1, n):
                if s[t][j] != 0:
                    if s[t][j] % s[t][t] == 0:
                        col_addmul(j, t, -(s[t][j] // s[t][t]))
                    else:
                        combine_cols(t, j, t)
            if all(s[i][t] == 0 for i in range(t + 1, m)) and \
               all(s[t][j] == 0 for j in range(t + 1, n)):
                return

    limit = min(m, n)
    t = 0
    while t < limit:
        pivot = None
        best = None
        for i in range(t, m):
            for j in range(t, n):
                val = abs(s[i][j])
                if val and (best is None or val < best):
                    pivot, best = (i, j), val
        if pivot is None:
            break
        pi, pj = pivot
        if pi != t:
            s[t], s[pi] = s[pi], s[t]
            u[t], u[pi] = u[pi], u[t]
        if pj != t:
            for i in range(m):
                s[i][t], s[i][pj] = s[i][pj], s[i][t]
            for i in range(n):
                v[i][t], v[i][pj] = v[i][pj], v[i][t]
        clear_at(t)
        t += 1

    r = t
    # enforce the divisibility chain d_i | d_{i+1}
    i = 0
    while i < r - 1:
        if s[i + 1][i + 1] % s[i][i] != 0:
            col_addmul(i, i + 1, 1)
            clear_at(i)
            i = 0
        else:
            i += 1
    for i in range(r):
        if s[i][i] < 0:
            s[i] = [-x for x in s[i]]
            u[i] = [-x for x in u[i]]
    return SmithForm(s, u, v)


def saturate(vectors: Sequence[Sequence[int]]) -> Matrix:
    """Basis of the saturation (Q-span intersected with Z^d) of integer vectors.

    The result is the Hermite-canonical basis of the smallest primitive
    sublattice of Z^d containing every input vector, so equal lattices always
    yield literally equal bases.  Empty input (or all-zero input) gives [].
    """
    vecs = [list(map(int, vec)) for vec in vectors]
    if not vecs:
        return []
    _dims(vecs)
    sf = snf(vecs)
    r = sum(1 for i in range(min(len(sf.s), len(sf.s[0]) if sf.s else 0)) if sf.s[i][i] != 0)
    if r == 0:
        return []
    vinv = inverse_unimodular(sf.v)
    # rows of V^{-1} spanning the row space of the input, saturated because
    # they extend to a basis of Z^d
    basis = vinv[:r]
    h = hnf(basis).h
    out = [row[:] for row in h[:r]]
    if any(all(x == 0 for x in row) for row in out):
        raise AssertionError("saturation basis lost rank")
    return out


def primitive_vector(v: Sequence[int]) -> list[int]:
    """v divided by the gcd of its entries, orientation preserved."""
    if all(x == 0 for x in v):
        raise ValueError("the zero vector has no primitive part")
    g = 0
    for x in v:
        g = gcd(g, x)
    return [x // g for x in v]


def primitive_direction(v: Sequence[int]) -> list[int]:
    """Primitive part of v with the sign normalized: first nonzero entry > 0."""
    p = primitive_vector(v)
    lead = next(x for x in p if x != 0)
    if lead < 0:
        p = [-x for x in p]
    return p
