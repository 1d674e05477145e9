"""Catalog polytopes, free sums, and the maximal-vertex-count lists.

The named polytopes are pinned coordinate representatives.  Coordinates
are checked at build time against the properties that characterize each
name (vertex count, reflexivity, smoothness, the kind of the vertex sum,
and extra shape facts such as central symmetry or the apex relation), so a
wrong representative cannot slip through silently.
"""

from __future__ import annotations

from .errors import ConstructionError, DomainError
from .polytope import LatticePolytope

NAMES = ("seg", "v2", "tv2", "e1", "e2", "q3", "q3p")

_HEX = ((1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1))

_COORDS = {
    "seg": ((-1,), (1,)),
    "v2": _HEX,
    "tv2": ((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1)),
    # the two singular five-vertex polygons: e2 has vertex sum zero, e1 has
    # a nonzero vertex sum lying on the boundary off the vertex set
    "e1": ((1, 0), (0, 1), (-1, 1), (-1, -1), (0, -1)),
    "e2": ((1, 0), (0, 1), (-1, 1), (-1, -1), (1, -1)),
    "q3": tuple((x, y, 0) for x, y in _HEX) + ((0, 0, 1), (0, 0, -1)),
    "q3p": tuple((x, y, 0) for x, y in _HEX) + ((0, 0, 1), (1, 0, -1)),
}

_EXPECTED = {
    "seg": dict(dim=1, nverts=2, smooth=True, nu="zero"),
    "v2": dict(dim=2, nverts=6, smooth=True, nu="zero"),
    "tv2": dict(dim=2, nverts=5, smooth=True, nu="vertex"),
    "e1": dict(dim=2, nverts=5, smooth=False, nu="boundary-nonvertex"),
    "e2": dict(dim=2, nverts=5, smooth=False, nu="zero"),
    "q3": dict(dim=3, nverts=8, smooth=True, nu="zero"),
    "q3p": dict(dim=3, nverts=8, smooth=True, nu="vertex"),
}


def _verify(name: str, p: LatticePolytope) -> None:
    from .analysis import vertex_sum, vertex_sum_kind

    want = _EXPECTED[name]
    problems = []
    if p.dim != want["dim"]:
        problems.append(f"dimension {p.dim} != {want['dim']}")
    if p.vertex_count != want["nverts"]:
        problems.append(f"vertex count {p.vertex_count} != {want['nverts']}")
    if not p.is_reflexive():
        problems.append("not reflexive")
    if not p.is_simplicial():
        problems.append("not simplicial")
    if p.is_smooth_fano() != want["smooth"]:
        problems.append(f"smoothness != {want['smooth']}")
    kind = vertex_sum_kind(p)
    if kind != want["nu"]:
        problems.append(f"vertex-sum kind {kind} != {want['nu']}")
    if name == "q3":
        vset = set(p.vertices)
        if any(tuple(-x for x in v) not in vset for v in p.vertices):
            problems.append("not centrally symmetric")
    if name == "q3p":
        apexes = [v for v in p.vertices if v[2] != 0]
        if len(apexes) != 2:
            problems.append("expected exactly two apexes off the base plane")
        else:
            s = tuple(a + b for a, b in zip(*apexes))
            if s not in set(p.vertices):
                problems.append("apex sum is not a base vertex")
    if problems:
        raise ConstructionError(f"representative for {name!r} failed: " + "; ".join(problems))


def construct(name: str) -> LatticePolytope:
    """Build a catalog polytope by name; the result is verified, not trusted."""
    key = name.lower()
    if key not in _COORDS:
        raise DomainError(f"unknown polytope name {name!r}; choose from {NAMES}")
    if key == "q3p":
        return _construct_q3p()
    p = LatticePolytope(_COORDS[key])
    _verify(key, p)
    return p


def _construct_q3p() -> LatticePolytope:
    base = tuple((x, y, 0) for x, y in _HEX)
    last_error = None
    # preferred apex pair first, then every other (apex, w - apex) choice
    candidates = [(1, 0)] + [w for w in _HEX if w != (1, 0)]
    for w in candidates:
        verts = base + ((0, 0, 1), (w[0], w[1], -1))
        try:
            p = LatticePolytope(verts)
            _verify("q3p", p)
            return p
        except ConstructionError as exc:
            last_error = exc
    raise ConstructionError(f"no valid apex pair found for q3p: {last_error}")


def free_sum(p: LatticePolytope, q: LatticePolytope) -> LatticePolytope:
    """Convex hull of p x {0} and {0} x q in the direct sum of the lattices."""
    dp, dq = p.dim, q.dim
    zp = (0,) * dq
    zq = (0,) * dp
    verts = [v + zp for v in p.vertices] + [zq + w for w in q.vertices]
    return LatticePolytope(verts)


def classification_list(d: int) -> list[LatticePolytope]:
    """The catalog of d-dimensional simplicial reflexive polytopes with 3d-1 vertices.

    For even d these are tv2, e1, e2 each summed with (d-2)/2 hexagons; for
    odd d they are q3 and q3p summed with (d-3)/2 hexagons.  d = 2 returns
    the three five-vertex polygons themselves for reference.
    """
    if d < 2:
        raise DomainError(f"classification list needs dimension >= 2, got {d}")
    hexagon = construct("v2")
    if d % 2 == 0:
        members = [construct("tv2"), construct("e1"), construct("e2")]
        copies = (d - 2) // 2
    else:
        members = [construct("q3"), construct("q3p")]
        copies = (d - 3) // 2
    for _ in range(copies):
        members = [free_sum(m, hexagon) for m in members]
    return members


def classification_names(d: int) -> list[str]:
    """Names parallel to classification_list(d), e.g. 'e1+v2^2'."""
    if d < 2:
        raise DomainError(f"classification list needs dimension >= 2, got {d}")
    if d % 2 == 0:
        bases = ["tv2", "e1", "e2"]
        copies = (d - 2) // 2
    else:
        bases = ["q3", "q3p"]
        copies = (d - 3) // 2
    suffix = "" if copies == 0 else ("+v2" if copies == 1 else f"+v2^{copies}")
    return [b + suffix for b in bases]


def casagrande_extremal(d: int) -> LatticePolytope:
    """The unique even-dimensional polytope with the maximal 3d vertices."""
    if d < 2 or d % 2:
        raise DomainError(f"the extremal polytope needs even dimension >= 2, got {d}")
    hexagon = construct("v2")
    out = hexagon
    for _ in range(d // 2 - 1):
        out = free_sum(out, hexagon)
    return out
