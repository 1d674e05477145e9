"""Lattice polytopes with exact facet structure, duality, and predicates."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import DegeneracyError, DimensionError, DomainError
from .hull import compute_hull, _subset_hull
from .linalg import is_lattice_basis, rank, vec_dot, vec_sub


@dataclass(frozen=True)
class Facet:
    """A facet: its vertex indices and the primitive integral outer normal.

    The supporting inequality is <normal, x> <= offset, tight exactly on the
    listed vertices; offset is positive because the origin is interior.  For
    a reflexive polytope offset == 1 and the normal is the dual vertex.
    """

    vertex_indices: frozenset[int]
    normal: tuple[int, ...]
    offset: int


@dataclass(frozen=True)
class PointLocation:
    kind: str  # "interior" | "boundary" | "outside"
    tight_facets: tuple[int, ...]


@dataclass(frozen=True)
class RationalPolytope:
    """Vertex-list polytope with exact rational coordinates (e.g. a dual)."""

    dim: int
    vertices: tuple[tuple[Fraction, ...], ...]

    def is_lattice(self) -> bool:
        return all(x.denominator == 1 for v in self.vertices for x in v)

    def to_lattice(self) -> "LatticePolytope":
        if not self.is_lattice():
            raise DomainError("polytope has non-integral vertices")
        return LatticePolytope(tuple(tuple(int(x) for x in v) for v in self.vertices))


class LatticePolytope:
    """Full-dimensional lattice polytope containing the origin in its interior.

    The vertex list is validated on construction (full dimension, interior
    origin, no redundant points) and the complete facet structure is
    computed eagerly; instances are immutable afterwards.
    """

    __slots__ = ("_dim", "_vertices", "_facets", "_frames", "_lattice_points")

    def __init__(self, vertices):
        verts = tuple(tuple(v) for v in vertices)
        if not verts:
            raise DimensionError("empty vertex list")
        d = len(verts[0])
        if d < 1:
            raise DimensionError("ambient dimension must be at least 1")
        for v in verts:
            if len(v) != d:
                raise DimensionError("vertices have inconsistent dimensions")
            for x in v:
                if not isinstance(x, int):
                    raise DimensionError(f"vertex coordinate {x!r} is not an integer")
        if len(set(verts)) != len(verts):
            raise DegeneracyError("degenerate input: duplicate vertices")
        if len(verts) < d + 1:
            raise DegeneracyError("degenerate input: too few vertices for full dimension")
        diffs = tuple(vec_sub(v, verts[0]) for v in verts[1:])
        if rank(diffs) != d:
            raise DegeneracyError("degenerate input: vertices are not full-dimensional")

        records = compute_hull(verts, d)
        for rec in records:
            if rec.offset <= 0:
                raise DomainError("origin is not strictly interior")
        records.sort(key=lambda r: (r.normal, r.offset))

        # every input point must be a genuine vertex of the hull
        pivot_route = all(r.frame is not None for r in records)
        if pivot_route:
            # pivoting only succeeds when all facets are simplices and every
            # boundary point is extreme, so membership in some facet suffices
            covered = set()
            for rec in records:
                covered.update(rec.tights)
            for i in range(len(verts)):
                if i not in covered:
                    raise DegeneracyError(
                        f"degenerate input: point {verts[i]} is not a vertex of the hull"
                    )
        else:
            # general route: the tight facet normals must span the space
            tight_normals = {i: [] for i in range(len(verts))}
            for rec in records:
                for i in rec.tights:
                    tight_normals[i].append(rec.normal)
            for i, normals in tight_normals.items():
                if not normals or rank(tuple(normals)) != d:
                    raise DegeneracyError(
                        f"degenerate input: point {verts[i]} is not a vertex of the hull"
                    )

        self._dim = d
        self._vertices = verts
        self._facets = tuple(
            Facet(frozenset(r.tights), r.normal, r.offset) for r in records
        )
        self._frames = tuple(r.frame for r in records)
        self._lattice_points = None

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def vertices(self) -> tuple[tuple[int, ...], ...]:
        return self._vertices

    @property
    def vertex_count(self) -> int:
        return len(self._vertices)

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self._facets

    def __repr__(self):
        return f"LatticePolytope(dim={self._dim}, vertices={len(self._vertices)})"

    @classmethod
    def from_points(cls, points) -> "LatticePolytope":
        """Convex hull of an arbitrary (possibly redundant) lattice point set."""
        pts = tuple(dict.fromkeys(tuple(p) for p in points))
        if not pts:
            raise DimensionError("empty point list")
        d = len(pts[0])
        if d == 1:
            lo = min(p[0] for p in pts)
            hi = max(p[0] for p in pts)
            return cls(((lo,), (hi,)))
        diffs = tuple(vec_sub(p, pts[0]) for p in pts[1:])
        if not diffs or rank(diffs) != d:
            raise DegeneracyError("degenerate input: points are not full-dimensional")
        records = _subset_hull(pts, d)
        tight_normals = {i: [] for i in range(len(pts))}
        for rec in records:
            for i in rec.tights:
                tight_normals[i].append(rec.normal)
        keep = [
            pts[i]
            for i in range(len(pts))
            if tight_normals[i] and rank(tuple(tight_normals[i])) == d
        ]
        return cls(keep)

    def facet_vertices(self, facet: Facet) -> tuple[tuple[int, ...], ...]:
        return tuple(self._vertices[i] for i in sorted(facet.vertex_indices))

    def frame_rows(self, facet_index: int) -> dict[int, tuple[int, ...]]:
        """Primitive integer rows proportional to the facet's dual basis.

        Row phi_v is positive on vertex v and zero on the facet's other
        vertices; the exact dual functional is phi_v / <phi_v, v>.
        """
        frame = self._frames[facet_index]
        if frame is None:
            from .hull import _simplex_frame

            facet = self._facets[facet_index]
            if len(facet.vertex_indices) != self._dim:
                raise DomainError("dual-basis frame requires a simplex facet")
            frame = _simplex_frame(self._vertices, tuple(sorted(facet.vertex_indices)))
            frames = list(self._frames)
            frames[facet_index] = frame
            self._frames = tuple(frames)
        return frame

    def dual(self) -> RationalPolytope:
        """Polar dual; its vertices are the scaled facet normals a/c."""
        verts = tuple(
            tuple(Fraction(x, f.offset) for x in f.normal) for f in self._facets
        )
        return RationalPolytope(self._dim, verts)

    def is_reflexive(self) -> bool:
        return all(f.offset == 1 for f in self._facets)

    def is_simplicial(self) -> bool:
        d = self._dim
        return all(len(f.vertex_indices) == d for f in self._facets)

    def is_smooth_fano(self) -> bool:
        if not (self.is_simplicial() and self.is_reflexive()):
            return False
        return all(
            is_lattice_basis(self.facet_vertices(f)) for f in self._facets
        )

    def picard_number(self) -> int:
        if not (self.is_simplicial() and self.is_reflexive()):
            raise DomainError("Picard number requires a simplicial reflexive polytope")
        return len(self._vertices) - self._dim

    def locate(self, point) -> PointLocation:
        """Classify a rational point against all facet inequalities."""
        tight = []
        outside = False
        for k, f in enumerate(self._facets):
            s = vec_dot(f.normal, point)
            if s > f.offset:
                outside = True
                break
            if s == f.offset:
                tight.append(k)
        if outside:
            return PointLocation("outside", ())
        if tight:
            return PointLocation("boundary", tuple(tight))
        return PointLocation("interior", ())

    def lattice_points(self):
        """All lattice points, split into (interior, boundary), both sorted."""
        if self._lattice_points is None:
            lo = [min(v[j] for v in self._vertices) for j in range(self._dim)]
            hi = [max(v[j] for v in self._vertices) for j in range(self._dim)]
            ineqs = [(f.normal, f.offset) for f in self._facets]
            interior = []
            boundary = []
            for pt in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
                on_face = False
                inside = True
                for normal, c in ineqs:
                    s = vec_dot(normal, pt)
                    if s > c:
                        inside = False
                        break
                    if s == c:
                        on_face = True
                if not inside:
                    continue
                if on_face:
                    boundary.append(pt)
                else:
                    interior.append(pt)
            self._lattice_points = (tuple(interior), tuple(boundary))
        return self._lattice_points
