"""Exact facet enumeration for full-dimensional polytopes with interior origin.

Two routes: a ridge-pivoting search that walks the facet graph (fast, used
whenever every facet is a simplex) and a brute-force scan over vertex
d-subsets (general, used as fallback for non-simplicial polytopes).  Both
work entirely over the integers.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .errors import ConsistencyError, DegeneracyError, DomainError
from .linalg import (
    adjugate_det,
    column_dots,
    rank,
    vec_dot,
    vec_gcd,
    vec_primitive,
    vec_sub,
)


class _NonSimplicial(Exception):
    """Pivoting met a facet with more than d vertices; use the subset scan."""


class FacetData:
    """Supporting hyperplane record produced by the hull routines.

    normal is a primitive integer outer normal, offset the support value
    (positive once origin-interiority is established), tights the sorted
    vertex indices on the hyperplane.  frame, when available, maps each
    tight vertex index to a primitive integer row proportional to the dual
    basis functional of that vertex (positive on it, zero on the others).
    """

    __slots__ = ("normal", "offset", "tights", "frame")

    def __init__(self, normal, offset, tights, frame=None):
        self.normal = normal
        self.offset = offset
        self.tights = tights
        self.frame = frame


def compute_hull(vertices, dim):
    """All supporting hyperplanes of conv(vertices); raises on degeneracy."""
    if dim == 1:
        return _hull_1d(vertices)
    try:
        return _pivot_hull(vertices, dim)
    except _NonSimplicial:
        return _subset_hull(vertices, dim)


def _hull_1d(vertices):
    xs = [v[0] for v in vertices]
    imax = max(range(len(xs)), key=lambda i: xs[i])
    imin = min(range(len(xs)), key=lambda i: xs[i])
    return [
        FacetData((-1,), -xs[imin], (imin,), {imin: (-1,)}),
        FacetData((1,), xs[imax], (imax,), {imax: (1,)}),
    ]


def _affine_rank(vertices, idxs):
    if len(idxs) <= 1:
        return 0
    base = vertices[idxs[0]]
    return rank(tuple(vec_sub(vertices[i], base) for i in idxs[1:]))


def _nullspace_basis(m, d):
    """Integer basis of {x : m @ x = 0}; m may be empty (full space)."""
    if not m:
        return [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    a = [[Fraction(x) for x in row] for row in m]
    cols = d
    pivots = []
    r = 0
    for c in range(cols):
        piv = None
        for i in range(r, len(a)):
            if a[i][c]:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    basis = []
    pivot_rows = {c: i for i, c in enumerate(pivots)}
    for f in range(cols):
        if f in pivot_rows:
            continue
        vec = [Fraction(0)] * cols
        vec[f] = Fraction(1)
        for c, i in pivot_rows.items():
            vec[c] = -a[i][f]
        lcm = 1
        for x in vec:
            lcm = lcm * x.denominator // _gcd(lcm, x.denominator)
        basis.append(tuple(int(x * lcm) for x in vec))
    return basis


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _initial_facet(vertices, d):
    """Rotate a supporting hyperplane until it is tight on a (d-1)-face."""
    n = len(vertices)
    a = tuple(1 if j == 0 else 0 for j in range(d))
    c = max(v[0] for v in vertices)
    for _ in range(d + 2):
        dots = [vec_dot(a, v) for v in vertices]
        tights = [i for i in range(n) if dots[i] == c]
        if _affine_rank(vertices, tights) == d - 1:
            g = vec_gcd(a)
            return tuple(x // g for x in a), c // g, tuple(tights)
        base = vertices[tights[0]]
        diffs = tuple(vec_sub(vertices[i], base) for i in tights[1:])
        phi = None
        for cand in _nullspace_basis(diffs, d):
            if rank((a, cand)) != 2:
                continue
            psi0 = vec_dot(cand, base)
            if any(vec_dot(cand, v) != psi0 for v in vertices):
                phi, psi = cand, psi0
                break
        if phi is None:
            raise DegeneracyError("vertices are not full-dimensional")
        dens = [vec_dot(phi, v) - psi for v in vertices]
        if max(dens) <= 0:
            phi = tuple(-x for x in phi)
            psi = -psi
            dens = [-x for x in dens]
        best_num = best_den = None
        for i in range(n):
            if dens[i] <= 0:
                continue
            num = c - dots[i]
            if best_num is None or num * best_den < best_num * dens[i]:
                best_num, best_den = num, dens[i]
        a = tuple(best_den * x + best_num * y for x, y in zip(a, phi))
        c = best_den * c + best_num * psi
        g = vec_gcd(a)
        a = tuple(x // g for x in a)
        c //= g
    raise ConsistencyError("initial facet search failed to converge")


def _simplex_frame(vertices, tights):
    """Primitive integer rows proportional to the dual basis of a simplex facet."""
    w = tuple(vertices[i] for i in tights)
    adj, dval = adjugate_det(w)
    if dval == 0:
        raise DomainError("origin is not strictly interior")
    cols = tuple(zip(*adj))
    frame = {}
    for k, vi in enumerate(tights):
        row = vec_primitive(cols[k])
        if vec_dot(row, vertices[vi]) < 0:
            row = tuple(-x for x in row)
        frame[vi] = row
    return frame


def _pivot_hull(vertices, d):
    n = len(vertices)
    cols = list(zip(*vertices))
    a0, c0, tights0 = _initial_facet(vertices, d)
    if len(tights0) != d:
        raise _NonSimplicial
    if c0 <= 0:
        raise DomainError("origin is not strictly interior")
    first = FacetData(a0, c0, tights0, _simplex_frame(vertices, tights0))
    found = {a0: first}
    queue = [first]
    while queue:
        f = queue.pop()
        a, c = f.normal, f.offset
        adots = column_dots(a, cols, n)
        for vi in f.tights:
            phi = f.frame[vi]
            pdots = column_dots(phi, cols, n)
            best_num = best_den = None
            best_w = -1
            tie = False
            for w in range(n):
                dw = -pdots[w]
                if dw <= 0:
                    continue
                num = c - adots[w]
                if best_num is None:
                    best_num, best_den, best_w = num, dw, w
                else:
                    lhs = num * best_den
                    rhs = best_num * dw
                    if lhs < rhs:
                        best_num, best_den, best_w = num, dw, w
                        tie = False
                    elif lhs == rhs:
                        tie = True
            if best_num is None:
                # the ridge's span contains a vertex, which forces a facet
                # hyperplane through the origin
                raise DomainError("origin is not strictly interior")
            if tie:
                raise _NonSimplicial
            a2 = tuple(best_den * x - best_num * y for x, y in zip(a, phi))
            g = vec_gcd(a2)
            a2 = tuple(x // g for x in a2)
            if a2 in found:
                continue
            c2 = (best_den * c) // g
            if c2 <= 0:
                raise DomainError("origin is not strictly interior")
            ridge = tuple(i for i in f.tights if i != vi)
            tights2 = tuple(sorted(ridge + (best_w,)))
            wstar = vertices[best_w]
            frame2 = {best_w: tuple(-x for x in phi)}
            for y in ridge:
                phi_y = f.frame[y]
                coef = vec_dot(phi_y, wstar)
                row = tuple(best_den * py + coef * px for py, px in zip(phi_y, phi))
                frame2[y] = vec_primitive(row)
            nf = FacetData(a2, c2, tights2, frame2)
            found[a2] = nf
            queue.append(nf)
    return list(found.values())


def _cofactor_normal(diffs, d):
    """Kernel vector of a (d-1) x d difference matrix via cofactor expansion."""
    normal = []
    for j in range(d):
        minor = tuple(tuple(row[k] for k in range(d) if k != j) for row in diffs)
        val = _det_small(minor)
        normal.append(-val if j % 2 else val)
    if all(x == 0 for x in normal):
        return None
    return tuple(normal)


def _det_small(m):
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    a = [list(row) for row in m]
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
            row_i, row_k = a[i], a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _subset_hull(vertices, d):
    n = len(vertices)
    hyps = {}
    for comb in combinations(range(n), d):
        base = vertices[comb[0]]
        diffs = tuple(vec_sub(vertices[i], base) for i in comb[1:])
        normal = _cofactor_normal(diffs, d)
        if normal is None:
            continue
        c = vec_dot(normal, base)
        above = below = False
        for v in vertices:
            s = vec_dot(normal, v)
            if s > c:
                above = True
            elif s < c:
                below = True
            if above and below:
                break
        if above and below:
            continue
        if above:
            normal = tuple(-x for x in normal)
            c = -c
        g = vec_gcd(normal)
        normal = tuple(x // g for x in normal)
        hyps[normal] = c // g
    facets = []
    for normal, c in sorted(hyps.items()):
        tights = tuple(i for i in range(n) if vec_dot(normal, vertices[i]) == c)
        facets.append(FacetData(normal, c, tights, None))
    return facets
