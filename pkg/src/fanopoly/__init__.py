"""fanopoly: exact tools for lattice polytopes with an interior origin.

Core objects are integer vertex lists with exact facet structure; on top of
that the package provides polar duality, reflexivity / simpliciality /
smoothness predicates, a canonical form for unimodular equivalence, the
catalog of reflexive polygons, free sums, special-facet statistics, and a
verifier for the maximal-vertex-count catalogs in higher dimension.
"""

from .polytope import Facet, LatticePolytope, PointLocation, RationalPolytope
from .normalform import NormalForm, dedupe, is_isomorphic, normal_form
from .constructions import (
    casagrande_extremal,
    classification_list,
    classification_names,
    construct,
    free_sum,
)
from .analysis import (
    FacetFrame,
    LemmaReport,
    SliceDistribution,
    Violation,
    check_lemmas,
    classify_case,
    facet_frame,
    find_basis_facet,
    hyperplane_distribution,
    neighboring_facet,
    neighboring_vertex,
    partial_add,
    section_2d,
    special_facets,
    vertex_sum,
    vertex_sum_kind,
)
from .polygons import PolygonClass, enumerate_reflexive_polygons, five_vertex_taxonomy
from .verify import (
    VerificationReport,
    verification_corpus,
    verify_casagrande,
    verify_polygon_landscape,
    verify_theorem,
)

__all__ = [
    "Facet",
    "FacetFrame",
    "LatticePolytope",
    "LemmaReport",
    "NormalForm",
    "PointLocation",
    "PolygonClass",
    "RationalPolytope",
    "SliceDistribution",
    "VerificationReport",
    "Violation",
    "casagrande_extremal",
    "check_lemmas",
    "classification_list",
    "classification_names",
    "classify_case",
    "construct",
    "dedupe",
    "enumerate_reflexive_polygons",
    "facet_frame",
    "find_basis_facet",
    "five_vertex_taxonomy",
    "free_sum",
    "hyperplane_distribution",
    "is_isomorphic",
    "neighboring_facet",
    "neighboring_vertex",
    "normal_form",
    "partial_add",
    "section_2d",
    "special_facets",
    "verification_corpus",
    "verify_casagrande",
    "verify_polygon_landscape",
    "verify_theorem",
    "vertex_sum",
    "vertex_sum_kind",
]

__version__ = "0.1.0"
