"""Special facets, slice statistics, neighbor structure, and lemma checkers.

Everything here assumes exact integer data.  Dual-basis functionals are
kept as primitive integer rows with a positive scale (u = phi / s), so the
hot checks run in pure integer arithmetic; the public FacetFrame exposes
them as exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    ClassificationError,
    ConsistencyError,
    DomainError,
)
from .linalg import (
    column_dots,
    det,
    invert_unimodular,
    rank,
    smith_normal_form_with_transforms,
    vec_dot,
)
from .polytope import Facet, LatticePolytope


@dataclass(frozen=True)
class FacetFrame:
    """Dual basis of a simplex facet: functionals with u^v(w) = delta_vw."""

    facet: Facet
    normal: tuple[int, ...]
    dual_basis: dict[int, tuple[Fraction, ...]]


@dataclass(frozen=True)
class SliceDistribution:
    """Vertex counts per level of a facet normal, plus the vertex-sum level."""

    counts: dict[int, int]
    nu_level: int


@dataclass(frozen=True)
class Violation:
    lemma: str
    facet: int
    witnesses: tuple[int, ...] = ()
    points: tuple[tuple[int, ...], ...] = ()

    def render(self) -> str:
        parts = [f"LEMMA {self.lemma} FACET {self.facet}"]
        if self.witnesses:
            parts.append("WITNESS " + " ".join(str(i) for i in self.witnesses))
        if self.points:
            parts.append(
                "POINTS " + " ".join(",".join(str(x) for x in p) for p in self.points)
            )
        return " ".join(parts)


@dataclass
class LemmaReport:
    violations: tuple[Violation, ...]
    checked: dict[str, int] = field(default_factory=dict)
    vacuous: dict[str, int] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.violations

    def render(self) -> str:
        lines = [v.render() for v in self.violations]
        for lemma in sorted(set(self.checked) | set(self.vacuous)):
            lines.append(
                f"# {lemma}: checked={self.checked.get(lemma, 0)}"
                f" vacuous={self.vacuous.get(lemma, 0)}"
            )
        return "\n".join(lines)


def vertex_sum(p: LatticePolytope) -> tuple[int, ...]:
    """Coordinate sum of all vertices."""
    return tuple(sum(c) for c in zip(*p.vertices))


def vertex_sum_kind(p: LatticePolytope) -> str:
    """One of zero / vertex / boundary-nonvertex / interior-nonzero."""
    nu = vertex_sum(p)
    if all(x == 0 for x in nu):
        return "zero"
    if nu in set(p.vertices):
        return "vertex"
    loc = p.locate(nu)
    if loc.kind == "boundary":
        return "boundary-nonvertex"
    if loc.kind == "interior":
        return "interior-nonzero"
    raise ConsistencyError("vertex sum lies outside the polytope")


def _facet_index(p: LatticePolytope, facet) -> int:
    if isinstance(facet, int):
        if not 0 <= facet < len(p.facets):
            raise DomainError(f"facet index {facet} out of range")
        return facet
    return p.facets.index(facet)


def _require_simplicial_reflexive(p: LatticePolytope) -> None:
    if not (p.is_simplicial() and p.is_reflexive()):
        raise DomainError("operation requires a simplicial reflexive polytope")


def special_facet_indices(p: LatticePolytope) -> tuple[int, ...]:
    """Indices of facets whose vertex cone contains the vertex sum."""
    _require_simplicial_reflexive(p)
    nu = vertex_sum(p)
    out = []
    for fi in range(len(p.facets)):
        frame = p.frame_rows(fi)
        if all(vec_dot(phi, nu) >= 0 for phi in frame.values()):
            out.append(fi)
    if not out:
        raise ConsistencyError("no special facet found")
    return tuple(out)


def special_facets(p: LatticePolytope) -> tuple[Facet, ...]:
    return tuple(p.facets[i] for i in special_facet_indices(p))


def hyperplane_distribution(p: LatticePolytope, facet) -> SliceDistribution:
    """How the vertices distribute over the integral levels of a facet normal."""
    fi = _facet_index(p, facet)
    f = p.facets[fi]
    if f.offset != 1:
        raise DomainError("level slicing needs a reflexive facet (offset 1)")
    counts: dict[int, int] = {}
    for v in p.vertices:
        lvl = vec_dot(f.normal, v)
        counts[lvl] = counts.get(lvl, 0) + 1
    nu_level = vec_dot(f.normal, vertex_sum(p))
    return SliceDistribution(counts, nu_level)


def classify_case(p: LatticePolytope, facet) -> str:
    """Case label A/B/C of a special facet of a polytope with 3d-1 vertices."""
    _require_simplicial_reflexive(p)
    d = p.dim
    if p.vertex_count != 3 * d - 1:
        raise DomainError("case labels apply to polytopes with 3d-1 vertices")
    dist = hyperplane_distribution(p, facet)
    table = {
        "A": ({1: d, 0: d, -1: d - 2, -2: 1}, 0),
        "B": ({1: d, 0: d - 1, -1: d}, 0),
        "C": ({1: d, 0: d, -1: d - 1}, 1),
    }
    for label, (counts, nu_level) in table.items():
        want = {k: v for k, v in counts.items() if v}
        if dist.counts == want and dist.nu_level == nu_level:
            return label
    raise ClassificationError(
        f"distribution {dist.counts} with level {dist.nu_level} matches no case"
    )


def _ridge_map(p: LatticePolytope) -> dict[frozenset, list[int]]:
    ridges: dict[frozenset, list[int]] = {}
    for fi, f in enumerate(p.facets):
        for v in f.vertex_indices:
            ridges.setdefault(f.vertex_indices - {v}, []).append(fi)
    return ridges


def neighboring_facet(p: LatticePolytope, facet, v: int) -> Facet:
    """The unique other facet containing all of the facet's vertices but v."""
    if not p.is_simplicial():
        raise DomainError("neighboring facets need a simplicial polytope")
    fi = _facet_index(p, facet)
    f = p.facets[fi]
    if v not in f.vertex_indices:
        raise DomainError(f"vertex {v} does not lie on the facet")
    ridge = f.vertex_indices - {v}
    for gi, g in enumerate(p.facets):
        if gi != fi and ridge <= g.vertex_indices:
            return g
    raise ConsistencyError("ridge lies on only one facet")


def neighboring_vertex(p: LatticePolytope, facet, v: int) -> int:
    """Index of the unique vertex of the neighboring facet outside the facet."""
    fi = _facet_index(p, facet)
    f = p.facets[fi]
    g = neighboring_facet(p, f, v)
    extra = g.vertex_indices - f.vertex_indices
    if len(extra) != 1:
        raise ConsistencyError("neighboring facet shares too few vertices")
    return next(iter(extra))


def facet_frame(p: LatticePolytope, facet) -> FacetFrame:
    """Exact rational dual basis of a simplex facet of a reflexive polytope."""
    _require_simplicial_reflexive(p)
    fi = _facet_index(p, facet)
    f = p.facets[fi]
    rows = p.frame_rows(fi)
    dual = {}
    for v, phi in rows.items():
        s = vec_dot(phi, p.vertices[v])
        if s <= 0:
            raise ConsistencyError("frame row has nonpositive scale")
        dual[v] = tuple(Fraction(x, s) for x in phi)
    for v, u in dual.items():
        for w in f.vertex_indices:
            expect = 1 if w == v else 0
            if sum(ux * wx for ux, wx in zip(u, p.vertices[w])) != expect:
                raise ConsistencyError("dual basis identity failed")
    return FacetFrame(f, f.normal, dual)


def partial_add(p: LatticePolytope, v, w):
    """Sum of two boundary lattice points when it stays on the boundary.

    Returns v + w when the sum is nonzero and the points share no facet;
    returns None otherwise.  The returned point is verified to lie on the
    boundary.
    """
    v = tuple(v)
    w = tuple(w)
    locv = p.locate(v)
    locw = p.locate(w)
    if locv.kind != "boundary" or locw.kind != "boundary":
        raise DomainError("partial addition needs boundary lattice points")
    s = tuple(a + b for a, b in zip(v, w))
    if all(x == 0 for x in s):
        return None
    if set(locv.tight_facets) & set(locw.tight_facets):
        return None
    if p.locate(s).kind != "boundary":
        raise ConsistencyError(f"sum {s} of non-neighboring boundary points left the boundary")
    return s


def section_2d(p: LatticePolytope, i: int, j: int, k: int) -> LatticePolytope:
    """The polygon cut out of p by the plane spanned by three vertices.

    Coordinates are taken in a basis of the rank-2 saturated sublattice of
    the plane, so the result is an honest two-dimensional lattice polytope
    containing the origin in its interior.
    """
    verts = p.vertices
    n = len(verts)
    for idx in (i, j, k):
        if not 0 <= idx < n:
            raise DomainError(f"vertex index {idx} out of range")
    span = (verts[i], verts[j], verts[k])
    if rank(span) != 2:
        raise DomainError("the three vertices do not span a plane")
    _, _, t = smith_normal_form_with_transforms(span)
    tinv = invert_unimodular(t)
    b1, b2 = tinv[0], tinv[1]
    constraints = {}
    for f in p.facets:
        alpha = vec_dot(f.normal, b1)
        beta = vec_dot(f.normal, b2)
        if alpha == 0 and beta == 0:
            continue
        g = _gcd3(alpha, beta, f.offset)
        constraints[(alpha // g, beta // g)] = min(
            constraints.get((alpha // g, beta // g), f.offset // g), f.offset // g
        )
    cons = sorted((a, b, c) for (a, b), c in constraints.items())
    pts = set()
    m = len(cons)
    for x in range(m):
        a1, b1c, c1 = cons[x]
        for y in range(x + 1, m):
            a2, b2c, c2 = cons[y]
            dval = a1 * b2c - a2 * b1c
            if dval == 0:
                continue
            pa = Fraction(c1 * b2c - c2 * b1c, dval)
            pb = Fraction(a1 * c2 - a2 * c1, dval)
            if all(a * pa + b * pb <= c for a, b, c in cons):
                pts.add((pa, pb))
    if len(pts) < 3:
        raise ConsistencyError("plane section did not produce a polygon")
    for pa, pb in pts:
        if pa.denominator != 1 or pb.denominator != 1:
            raise ConsistencyError(
                f"section vertex ({pa}, {pb}) is not a lattice point of the induced lattice"
            )
    return LatticePolytope(sorted((int(pa), int(pb)) for pa, pb in pts))


def _gcd3(a, b, c):
    from math import gcd

    return gcd(gcd(abs(a), abs(b)), abs(c)) or 1


def find_basis_facet(p: LatticePolytope) -> Facet:
    """A facet whose vertices form a lattice basis, found by determinant descent."""
    fi, _ = basis_descent(p)
    return p.facets[fi]


def basis_descent(p: LatticePolytope) -> tuple[int, list[int]]:
    """Descend to a unimodular facet; returns (facet index, |det| trail)."""
    _require_simplicial_reflexive(p)
    d = p.dim
    pre = _Structure(p)
    for fi in range(len(p.facets)):
        in_h0 = sum(
            1 for v in pre.fverts[fi] if pre.prows[fi][pre.nvert[fi][v]] == 0
        )
        if in_h0 < d - 1:
            raise DomainError(
                "descent hypothesis fails: a facet has fewer than d-1 neighbors at level 0"
            )
    fi = 0
    trail = [pre.facet_det(fi)]
    for _ in range(len(p.facets) + 1):
        good = []
        candidates = []
        for v in pre.fverts[fi]:
            nv = pre.nvert[fi][v]
            if pre.prows[fi][nv] != 0:
                continue
            phi = pre.frames[fi][v]
            s = pre.scales[fi][v]
            if vec_dot(phi, p.vertices[nv]) == -s:
                good.append(v)
            else:
                candidates.append(v)
        if len(good) >= d - 1:
            if pre.facet_det(fi) != 1:
                raise ConsistencyError("descent stopped on a non-unimodular facet")
            return fi, trail
        if not candidates:
            raise ConsistencyError("descent is stuck without a smaller neighbor")
        fi = pre.nfacet[fi][candidates[0]]
        r = pre.facet_det(fi)
        if r >= trail[-1]:
            raise ConsistencyError("facet determinant failed to decrease")
        trail.append(r)
    raise ConsistencyError("descent did not terminate")


class _Structure:
    """Shared exact data for the lemma suite: frames, neighbors, levels."""

    def __init__(self, p: LatticePolytope):
        _require_simplicial_reflexive(p)
        self.p = p
        self.n = p.vertex_count
        self.d = p.dim
        facets = p.facets
        self.nf = len(facets)
        verts = p.vertices
        cols = list(zip(*verts))
        self.prows = [
            column_dots(f.normal, cols, self.n) for f in facets
        ]
        self.fverts = [tuple(sorted(f.vertex_indices)) for f in facets]
        self.frames = []
        self.scales = []
        self.phidots = []
        for fi in range(self.nf):
            frame = p.frame_rows(fi)
            self.frames.append(frame)
            self.scales.append(
                {v: vec_dot(phi, verts[v]) for v, phi in frame.items()}
            )
            self.phidots.append(
                {v: column_dots(phi, cols, self.n) for v, phi in frame.items()}
            )
        ridges: dict[frozenset, list[int]] = {}
        for fi, f in enumerate(facets):
            for v in f.vertex_indices:
                ridges.setdefault(f.vertex_indices - {v}, []).append(fi)
        self.nfacet = []
        self.nvert = []
        for fi, f in enumerate(facets):
            nfac = {}
            nvtx = {}
            for v in f.vertex_indices:
                pair = ridges[f.vertex_indices - {v}]
                if len(pair) != 2:
                    raise ConsistencyError("a ridge is not shared by exactly two facets")
                gi = pair[0] if pair[1] == fi else pair[1]
                nfac[v] = gi
                extra = facets[gi].vertex_indices - f.vertex_indices
                if len(extra) != 1:
                    raise ConsistencyError("neighboring facet shares too few vertices")
                nvtx[v] = next(iter(extra))
            self.nfacet.append(nfac)
            self.nvert.append(nvtx)
        self.vert_tights = [
            frozenset(fi for fi in range(self.nf) if self.prows[fi][v] == 1)
            for v in range(self.n)
        ]
        self._dets: dict[int, int] = {}

    def facet_det(self, fi: int) -> int:
        r = self._dets.get(fi)
        if r is None:
            r = abs(det(tuple(self.p.vertices[v] for v in self.fverts[fi])))
            self._dets[fi] = r
        return r


def check_lemmas(p: LatticePolytope) -> LemmaReport:
    """Exhaustively instantiate the structural lemmas and record violations.

    Hypotheses act as filters: instantiations whose hypothesis fails are
    counted as vacuous, never assumed.  The returned report is empty for
    every valid simplicial reflexive polytope.
    """
    pre = _Structure(p)
    verts = p.vertices
    n, d, nf = pre.n, pre.d, pre.nf
    violations: list[Violation] = []
    checked: dict[str, int] = {}
    vacuous: dict[str, int] = {}

    def tick(lemma):
        checked[lemma] = checked.get(lemma, 0) + 1

    def skip(lemma):
        vacuous[lemma] = vacuous.get(lemma, 0) + 1

    def bad(lemma, fi, witnesses=(), points=()):
        violations.append(Violation(lemma, fi, tuple(witnesses), tuple(points)))

    interior_pts, boundary_pts = p.lattice_points()
    vset = {v: i for i, v in enumerate(verts)}
    # pairing of every facet normal against every boundary lattice point
    bcols = list(zip(*boundary_pts)) if boundary_pts else []
    bdots = [
        column_dots(p.facets[fi].normal, bcols, len(boundary_pts))
        for fi in range(nf)
    ]
    point_tights = [
        frozenset(fi for fi in range(nf) if bdots[fi][pi] == 1)
        for pi in range(len(boundary_pts))
    ]

    for fi in range(nf):
        prow = pre.prows[fi]
        fv = pre.fverts[fi]
        frame = pre.frames[fi]
        scales = pre.scales[fi]
        phid = pre.phidots[fi]
        level0_verts = [x for x in range(n) if prow[x] == 0]

        # (1) transformation between the normals of neighboring facets
        for v in fv:
            gi = pre.nfacet[fi][v]
            grow = pre.prows[gi]
            s = scales[v]
            pv = phid[v]
            coef = grow[v] - 1
            tick("normal-transform")
            if coef > -1:
                bad("normal-transform", fi, (v,))
                continue
            for x in range(n):
                if s * grow[x] != s * prow[x] + coef * pv[x]:
                    bad("normal-transform", fi, (v, x))
                    break

        # (2) frame lower bound with tightness on the neighboring facet
        for v in fv:
            s = scales[v]
            pv = phid[v]
            gi = pre.nfacet[fi][v]
            gset = p.facets[gi].vertex_indices
            tick("frame-bound")
            for x in range(n):
                lhs = s * (prow[x] - 1)
                if lhs > pv[x]:
                    bad("frame-bound", fi, (v, x))
                    break
                if lhs == pv[x] and x not in gset:
                    bad("frame-bound", fi, (v, x))
                    break

        # (3) a basis facet pairs with a level-0 neighbor at exactly -1
        basis = pre.facet_det(fi) == 1
        for v in fv:
            nv = pre.nvert[fi][v]
            if prow[nv] == 0 and basis:
                tick("basis-neighbor")
                if phid[v][nv] != -scales[v]:
                    bad("basis-neighbor", fi, (v, nv))
            else:
                skip("basis-neighbor")

        # level-0 boundary lattice points lie on neighboring facets
        neighbor_facets = frozenset(pre.nfacet[fi].values())
        for pi, pt in enumerate(boundary_pts):
            if bdots[fi][pi] != 0:
                skip("level0-neighbor")
                continue
            tick("level0-neighbor")
            if not (point_tights[pi] & neighbor_facets):
                bad("level0-neighbor", fi, (), (pt,))

        # level-0 vertices are neighboring vertices, with the sign criterion
        nv_of = {pre.nvert[fi][w]: w for w in fv}
        for x in level0_verts:
            tick("level0-neighbor")
            if x not in nv_of:
                bad("level0-neighbor", fi, (x,))
                continue
            for w in fv:
                is_nv = pre.nvert[fi][w] == x
                if is_nv != (phid[w][x] < 0):
                    bad("level0-neighbor", fi, (w, x))
        for w in fv:
            negs = [x for x in level0_verts if phid[w][x] < 0]
            if len(negs) > 1:
                bad("level0-neighbor", fi, (w, *negs))

        # a level-0 vertex on exactly one neighboring facet adds into the facet
        for x in level0_verts:
            holders = [w for w in fv if x in p.facets[pre.nfacet[fi][w]].vertex_indices]
            if len(holders) != 1:
                skip("level0-sum")
                continue
            tick("level0-sum")
            w = holders[0]
            if pre.vert_tights[x] & pre.vert_tights[w]:
                bad("level0-sum", fi, (x, w))
                continue
            s = tuple(a + b for a, b in zip(verts[x], verts[w]))
            if vec_dot(p.facets[fi].normal, s) != 1 or p.locate(s).kind == "outside":
                bad("level0-sum", fi, (x, w))

        # d-1 clean level-0 neighbors force a unimodular facet
        clean = 0
        for v in fv:
            nv = pre.nvert[fi][v]
            if prow[nv] == 0 and phid[v][nv] == -scales[v]:
                clean += 1
        if clean >= d - 1:
            tick("near-basis")
            if pre.facet_det(fi) != 1:
                bad("near-basis", fi, fv)
        else:
            skip("near-basis")

        # two clean opposite neighbors exclude a doubly negative vertex below
        for ai in range(len(fv)):
            for bi in range(ai + 1, len(fv)):
                v1, v2 = fv[ai], fv[bi]
                y1, y2 = pre.nvert[fi][v1], pre.nvert[fi][v2]
                if (
                    y1 == y2
                    or prow[y1] != 0
                    or prow[y2] != 0
                    or phid[v1][y1] != -scales[v1]
                    or phid[v2][y2] != -scales[v2]
                ):
                    skip("opposite-exclusion")
                    continue
                tick("opposite-exclusion")
                for x in range(n):
                    if (
                        prow[x] == -1
                        and phid[v1][x] == -scales[v1]
                        and phid[v2][x] == -scales[v2]
                    ):
                        bad("opposite-exclusion", fi, (v1, v2, x))

        # facets whose lattice points are all vertices, with a full level 0
        facet_points = [
            boundary_pts[pi] for pi in range(len(boundary_pts)) if bdots[fi][pi] == 1
        ]
        all_vertices = all(pt in vset for pt in facet_points)
        if all_vertices and len(level0_verts) == d:
            tick("lattice-facet")
            fvset = {verts[v] for v in fv}
            for x in level0_verts:
                vx = verts[x]
                forms = [
                    y
                    for y in fv
                    if tuple(a + b for a, b in zip(vx, verts[y])) in fvset
                ]
                if not forms:
                    bad("lattice-facet", fi, (x,))
            for y in fv:
                vy = verts[y]
                hits = [
                    x
                    for x in level0_verts
                    if tuple(a + b for a, b in zip(verts[x], vy)) in fvset
                ]
                if not hits:
                    bad("lattice-facet", fi, (y,))
            if pre.facet_det(fi) != 1:
                bad("lattice-facet", fi, fv)
            for x in range(n):
                if prow[x] == -1:
                    neg = tuple(-c for c in verts[x])
                    if neg not in fvset:
                        bad("lattice-facet", fi, (x,))
        else:
            skip("lattice-facet")

    violations.sort(key=lambda v: (v.lemma, v.facet, v.witnesses))
    return LemmaReport(tuple(violations), checked, vacuous)
