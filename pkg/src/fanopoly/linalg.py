"""Exact integer and rational linear algebra on small dense matrices.

Vectors are tuples of Python ints (or Fractions for rational results),
matrices are tuples of row tuples.  Everything is arbitrary precision; no
floating point is used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DimensionError, SingularMatrixError

IntVector = tuple[int, ...]
RatVector = tuple[Fraction, ...]
IntMatrix = tuple[tuple[int, ...], ...]


def _check_rect(m) -> tuple[int, int]:
    if not m or not m[0]:
        raise DimensionError("matrix must have at least one row and one column")
    cols = len(m[0])
    for row in m:
        if len(row) != cols:
            raise DimensionError("matrix rows have inconsistent lengths")
    return len(m), cols


def vec_dot(a, b) -> int:
    return sum([x * y for x, y in zip(a, b)])


def column_dots(vec, cols, n):
    """All <vec, point> values at once over points given column-wise.

    cols[j] holds the j-th coordinates of the n points; cheaper than n
    separate dot products because the loops run at C speed.
    """
    dots = None
    for j, vj in enumerate(vec):
        if not vj:
            continue
        cj = cols[j]
        if dots is None:
            dots = [vj * x for x in cj]
        else:
            dots = [acc + vj * x for acc, x in zip(dots, cj)]
    if dots is None:
        dots = [0] * n
    return dots


def vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def vec_neg(a):
    return tuple(-x for x in a)


def vec_gcd(a) -> int:
    g = 0
    for x in a:
        g = gcd(g, x)
    return g


def vec_primitive(a):
    """Divide out the content of an integer vector; zero vectors are rejected."""
    g = vec_gcd(a)
    if g == 0:
        raise SingularMatrixError("cannot primitivize the zero vector")
    if g == 1:
        return tuple(a)
    return tuple(x // g for x in a)


def identity(n: int) -> IntMatrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a, b) -> IntMatrix:
    bt = list(zip(*b))
    return tuple(tuple(vec_dot(row, col) for col in bt) for row in a)


def mat_vec(m, v):
    return tuple(vec_dot(row, v) for row in m)


def transpose(m):
    return tuple(zip(*m))


def det(m) -> int:
    """Exact determinant via fraction-free (Bareiss) elimination."""
    rows, cols = _check_rect(m)
    if rows != cols:
        raise DimensionError(f"determinant needs a square matrix, got {rows}x{cols}")
    a = [list(row) for row in m]
    n = rows
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and a*x + b*y = g."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        return -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def hermite_normal_form(m) -> tuple[IntMatrix, IntMatrix]:
    """Row-style Hermite normal form.

    Returns (H, U) with U unimodular and H = U @ m.  Pivots are positive,
    entries above each pivot are reduced into [0, pivot), and pivot columns
    move left to right down the rows (upper triangular for square
    nonsingular input).
    """
    rows, cols = _check_rect(m)
    h = [list(row) for row in m]
    u = [list(row) for row in identity(rows)]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if h[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
            u[r], u[piv] = u[piv], u[r]
        for i in range(r + 1, rows):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            hr, hi = h[r], h[i]
            ur, ui = u[r], u[i]
            h[r] = [x * hr[j] + y * hi[j] for j in range(cols)]
            h[i] = [p * hi[j] - q * hr[j] for j in range(cols)]
            u[r] = [x * ur[j] + y * ui[j] for j in range(rows)]
            u[i] = [p * ui[j] - q * ur[j] for j in range(rows)]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
            u[r] = [-x for x in u[r]]
        pivot = h[r][c]
        for i in range(r):
            q = h[i][c] // pivot
            if q:
                hi, hr = h[i], h[r]
                h[i] = [hi[j] - q * hr[j] for j in range(cols)]
                ui, ur = u[i], u[r]
                u[i] = [ui[j] - q * ur[j] for j in range(rows)]
        r += 1
        if r == rows:
            break
    return tuple(tuple(row) for row in h), tuple(tuple(row) for row in u)


def hnf_matrix(m) -> IntMatrix:
    """Hermite normal form without the transform (faster, used in hot paths)."""
    rows, cols = _check_rect(m)
    h = [list(row) for row in m]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if h[i][c]:
                piv = i
                break
        if piv is None:
            continue
        if piv != r:
            h[r], h[piv] = h[piv], h[r]
        for i in range(r + 1, rows):
            if h[i][c] == 0:
                continue
            a, b = h[r][c], h[i][c]
            g, x, y = _xgcd(a, b)
            p, q = a // g, b // g
            hr, hi = h[r], h[i]
            h[r] = [x * hr[j] + y * hi[j] for j in range(cols)]
            h[i] = [p * hi[j] - q * hr[j] for j in range(cols)]
        if h[r][c] < 0:
            h[r] = [-x for x in h[r]]
        pivot = h[r][c]
        for i in range(r):
            q = h[i][c] // pivot
            if q:
                hi, hr = h[i], h[r]
                h[i] = [hi[j] - q * hr[j] for j in range(cols)]
        r += 1
        if r == rows:
            break
    return tuple(tuple(row) for row in h)


def smith_normal_form(m) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... of an integer matrix, nonnegative."""
    diag, _, _ = smith_normal_form_with_transforms(m)
    return diag


def smith_normal_form_with_transforms(m):
    """Smith form with transforms: returns (diag, S, T) with S @ m @ T diagonal.

    S and T are unimodular; diag lists min(r, c) invariant factors with the
    zero factors last.
    """
    rows, cols = _check_rect(m)
    a = [list(row) for row in m]
    s = [list(row) for row in identity(rows)]
    t = [list(row) for row in identity(cols)]

    def row_combine(i, j, x, y, p, q):
        # rows i, j <- (x*ri + y*rj, p*rj - q*ri); the 2x2 block has det 1
        for mat in (a, s):
            ri, rj = mat[i], mat[j]
            mat[i] = [x * u + y * v for u, v in zip(ri, rj)]
            mat[j] = [p * v - q * u for u, v in zip(ri, rj)]

    def col_combine(i, j, x, y, p, q):
        for mat in (a, t):
            for row in mat:
                u, v = row[i], row[j]
                row[i] = x * u + y * v
                row[j] = p * v - q * u

    def clear_position(k):
        # Repeatedly clear row k and column k until only a[k][k] remains.
        # Exact multiples are eliminated without touching the pivot row or
        # column; the Bezout combination is reserved for entries the pivot
        # does not divide, and each use strictly shrinks |a[k][k]|, which
        # bounds the number of passes.
        while True:
            dirty = False
            for i in range(rows):
                if i == k or not a[i][k]:
                    continue
                piv = a[k][k]
                if piv and a[i][k] % piv == 0:
                    q = a[i][k] // piv
                    for mat in (a, s):
                        rk = mat[k]
                        mat[i] = [u - q * v for u, v in zip(mat[i], rk)]
                else:
                    g, x, y = _xgcd(piv, a[i][k])
                    row_combine(k, i, x, y, piv // g, a[i][k] // g)
                dirty = True
            for j in range(cols):
                if j == k or not a[k][j]:
                    continue
                piv = a[k][k]
                if piv and a[k][j] % piv == 0:
                    q = a[k][j] // piv
                    for mat in (a, t):
                        for row in mat:
                            row[j] -= q * row[k]
                else:
                    g, x, y = _xgcd(piv, a[k][j])
                    col_combine(k, j, x, y, piv // g, a[k][j] // g)
                dirty = True
            if not dirty:
                return

    size = min(rows, cols)
    for k in range(size):
        piv = None
        for i in range(k, rows):
            for j in range(k, cols):
                if a[i][j]:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        if piv[0] != k:
            a[k], a[piv[0]] = a[piv[0]], a[k]
            s[k], s[piv[0]] = s[piv[0]], s[k]
        if piv[1] != k:
            for mat in (a, t):
                for row in mat:
                    row[k], row[piv[1]] = row[piv[1]], row[k]
        clear_position(k)

    # normalize signs, then enforce the divisibility chain
    for k in range(size):
        if a[k][k] < 0:
            a[k] = [-x for x in a[k]]
            s[k] = [-x for x in s[k]]
    changed = True
    while changed:
        changed = False
        for k in range(size - 1):
            d, e = a[k][k], a[k + 1][k + 1]
            if e and (d == 0 or e % d):
                # pull e into column k and redo the local clearing
                for mat in (a, t):
                    for row in mat:
                        row[k] += row[k + 1]
                clear_position(k)
                if a[k][k] < 0:
                    a[k] = [-x for x in a[k]]
                    s[k] = [-x for x in s[k]]
                if a[k + 1][k + 1] < 0:
                    a[k + 1] = [-x for x in a[k + 1]]
                    s[k + 1] = [-x for x in s[k + 1]]
                changed = True

    diag = tuple(a[k][k] for k in range(size))
    return diag, tuple(tuple(r) for r in s), tuple(tuple(r) for r in t)


def rank(m) -> int:
    """Rank over the rationals, computed fraction-free."""
    rows, cols = _check_rect(m)
    a = [list(row) for row in m]
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, rows):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                f1, f2 = a[r][c], a[i][c]
                a[i] = [f1 * x - f2 * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def is_lattice_basis(vectors) -> bool:
    """True iff the given d vectors of dimension d span the full lattice."""
    if not vectors:
        raise DimensionError("empty vector list")
    d = len(vectors[0])
    if len(vectors) != d:
        raise DimensionError(f"need exactly {d} vectors of dimension {d}, got {len(vectors)}")
    return abs(det(tuple(tuple(v) for v in vectors))) == 1


def solve_rational(m, rhs) -> RatVector:
    """Exact solution of m @ x = rhs for square nonsingular integer m."""
    rows, cols = _check_rect(m)
    if rows != cols:
        raise DimensionError("solve needs a square matrix")
    if len(rhs) != rows:
        raise DimensionError("right-hand side has the wrong length")
    a = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(m)]
    n = rows
    for k in range(n):
        piv = None
        for i in range(k, n):
            if a[i][k]:
                piv = i
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[k], a[piv] = a[piv], a[k]
        inv = 1 / a[k][k]
        a[k] = [x * inv for x in a[k]]
        for i in range(n):
            if i != k and a[i][k]:
                f = a[i][k]
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return tuple(a[i][n] for i in range(n))


def adjugate_det(m) -> tuple[IntMatrix, int]:
    """Adjugate matrix and determinant: adj(m) @ m = det(m) * I, all integer."""
    rows, cols = _check_rect(m)
    if rows != cols:
        raise DimensionError("adjugate needs a square matrix")
    n = rows
    if n == 1:
        return ((1,),), m[0][0]
    d = det(m)
    adj = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(m[r][c] for c in range(n) if c != i)
                for r in range(n)
                if r != j
            )
            row.append((-1) ** (i + j) * det(minor))
        adj.append(tuple(row))
    return tuple(adj), d


def invert_unimodular(m) -> IntMatrix:
    """Exact inverse of a unimodular integer matrix."""
    adj, d = adjugate_det(m)
    if d == 1:
        return adj
    if d == -1:
        return tuple(tuple(-x for x in row) for row in adj)
    raise SingularMatrixError(f"matrix has determinant {d}, not +-1")
