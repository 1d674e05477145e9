"""Exhaustive catalog of reflexive polygons up to unimodular equivalence.

In the plane, having no interior lattice point besides the origin is
equivalent to reflexivity, so the search grows vertex sets inside a fixed
coordinate box, prunes any configuration that picks up a stray interior
point, and finally buckets the surviving polygons by canonical form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import gcd

from .errors import EnumerationError, TaxonomyError
from .normalform import normal_form
from .polytope import LatticePolytope

DEFAULT_BOX = 3


@dataclass(frozen=True)
class PolygonClass:
    representative: LatticePolytope
    vertex_count: int
    smooth: bool
    nu_kind: str
    key: tuple[tuple[int, ...], ...]


def _hull2d(points):
    """Vertices of the planar convex hull, counterclockwise (monotone chain)."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return tuple(pts)

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower = []
    for p in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(pts):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


def _interior_clean(hull):
    """True iff the polygon has no interior lattice point besides the origin."""
    xs = [p[0] for p in hull]
    ys = [p[1] for p in hull]
    m = len(hull)
    for x in range(min(xs) + 1, max(xs)):
        for y in range(min(ys) + 1, max(ys)):
            if x == 0 and y == 0:
                continue
            inside = True
            for i in range(m):
                ax, ay = hull[i]
                bx, by = hull[(i + 1) % m]
                if (bx - ax) * (y - ay) - (by - ay) * (x - ax) <= 0:
                    inside = False
                    break
            if inside:
                return False
    return True


def _origin_interior(hull):
    m = len(hull)
    for i in range(m):
        ax, ay = hull[i]
        bx, by = hull[(i + 1) % m]
        if (bx - ax) * (-ay) - (by - ay) * (-ax) <= 0:
            return False
    return True


def _origin_in_closed_hull(hull):
    if len(hull) < 3:
        return False
    m = len(hull)
    for i in range(m):
        ax, ay = hull[i]
        bx, by = hull[(i + 1) % m]
        if (bx - ax) * (-ay) - (by - ay) * (-ax) < 0:
            return False
    return True


_DIHEDRAL = (
    lambda x, y: (x, y),
    lambda x, y: (-x, y),
    lambda x, y: (x, -y),
    lambda x, y: (-x, -y),
    lambda x, y: (y, x),
    lambda x, y: (-y, x),
    lambda x, y: (y, -x),
    lambda x, y: (-y, -x),
)


def _canonical_key(hull):
    return min(tuple(sorted(g(x, y) for x, y in hull)) for g in _DIHEDRAL)


def enumerate_reflexive_polygons(box: int = DEFAULT_BOX) -> list[PolygonClass]:
    """All reflexive polygon classes with a representative inside the box.

    Grows vertex sets one lattice point at a time starting from clean
    triangles around the origin, pruning as soon as an interior lattice
    point other than the origin appears.  With the default box this yields
    exactly 16 classes; any other count raises.
    """
    pts = [
        (x, y)
        for x in range(-box, box + 1)
        for y in range(-box, box + 1)
        if (x, y) != (0, 0) and gcd(abs(x), abs(y)) == 1
    ]
    visited = set()
    stack = []
    for tri in combinations(pts, 3):
        hull = _hull2d(tri)
        if len(hull) != 3:
            continue
        if not _origin_in_closed_hull(hull):
            continue
        if not _interior_clean(hull):
            continue
        key = _canonical_key(hull)
        if key in visited:
            continue
        visited.add(key)
        stack.append(hull)
    goods = []
    while stack:
        hull = stack.pop()
        if _origin_interior(hull):
            goods.append(hull)
        hset = set(hull)
        for x in pts:
            if x in hset:
                continue
            newhull = _hull2d(hull + (x,))
            if x not in newhull:
                continue
            if not _interior_clean(newhull):
                continue
            key = _canonical_key(newhull)
            if key in visited:
                continue
            visited.add(key)
            stack.append(newhull)
    classes: dict[tuple, LatticePolytope] = {}
    for hull in goods:
        p = LatticePolytope(hull)
        key = normal_form(p).matrix
        classes.setdefault(key, p)
    if len(classes) != 16:
        raise EnumerationError(
            f"expected 16 reflexive polygon classes, found {len(classes)}"
        )
    out = []
    for key in classes:
        rep = LatticePolytope(tuple(zip(*key)))
        from .analysis import vertex_sum_kind

        out.append(
            PolygonClass(
                representative=rep,
                vertex_count=rep.vertex_count,
                smooth=rep.is_smooth_fano(),
                nu_kind=vertex_sum_kind(rep),
                key=key,
            )
        )
    out.sort(key=lambda c: (c.vertex_count, c.key))
    return out


def five_vertex_taxonomy(classes=None) -> dict[str, PolygonClass]:
    """Assign the three five-vertex classes to the names tv2, e1, e2.

    tv2 is the smooth one; of the two singular ones, e2 has vertex sum
    zero and e1 has a nonzero non-vertex sum.  The assignment must be
    total and unambiguous, otherwise the catalog itself is in doubt.
    """
    if classes is None:
        classes = enumerate_reflexive_polygons()
    five = [c for c in classes if c.vertex_count == 5]
    if len(five) != 3:
        raise TaxonomyError(f"expected 3 five-vertex classes, found {len(five)}")
    smooth = [c for c in five if c.smooth]
    singular = [c for c in five if not c.smooth]
    if len(smooth) != 1 or len(singular) != 2:
        raise TaxonomyError("expected exactly one smooth five-vertex class")
    zero = [c for c in singular if c.nu_kind == "zero"]
    off = [c for c in singular if c.nu_kind == "boundary-nonvertex"]
    if len(zero) != 1 or len(off) != 1:
        raise TaxonomyError(
            "vertex-sum kinds of the singular classes are "
            + ", ".join(c.nu_kind for c in singular)
        )
    return {"tv2": smooth[0], "e1": off[0], "e2": zero[0]}
