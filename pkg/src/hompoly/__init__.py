"""Exact polytopes of affine maps between polytopes.

The package builds Hom(P, Q), the polytope of affine maps sending P
into Q, over exact rational arithmetic, classifies its vertices by
rank and by the surjective/injective factorization, reproduces the
vertex-count table for regular polygon pairs, and certifies the
nonvanishing determinants behind the generic simplicity result.
"""

from .classify import (
    ClassifySummary,
    MapClassification,
    classify_all,
    image_polytope,
    is_deflation,
    is_face_collapse,
    map_rank,
    rank1_polygon_count,
    surj_inj_factorize,
    surjective_onto,
)
from .coincidence import (
    Certificate,
    CoincidenceGraph,
    GenericMatrix,
    build_generic_matrix,
    canonical_encoding,
    certify_nonvanishing,
    enumerate_graphs,
    evaluate_matrix,
    poly_eval,
    reject_reason,
    symbolic_determinant,
)
from .constructions import (
    bipyramid,
    cross_polytope,
    cube,
    dual,
    join,
    product,
    regular_ngon,
    simplex,
    standard,
    tensor,
)
from .errors import (
    GeometryError,
    InfeasibleError,
    LowerDimensionalError,
    OutsideHullError,
    UnboundedError,
)
from .hom import (
    AffineMap,
    FacetLabel,
    HomPolytope,
    IdentityCheckReport,
    build_hom,
    enumerate_vertex_maps,
    hom_identity_check,
    is_vertex_map,
)
from .polyio import ParseError, read_labels, read_polytope, write_hrep, write_labels, write_vrep
from .polytope import (
    AffineChart,
    Containment,
    Face,
    HRep,
    Inequality,
    Polytope,
    VRep,
    chart_project,
    contains_point,
    f_vector,
    face_lattice,
    hrep_to_vrep,
    is_simple_vertex,
    polytope_dim,
    vrep_to_hrep,
)
from .regular import (
    ClusterPartition,
    CountRow,
    DivisibilityReport,
    PartitionMismatchError,
    TableDiagnostics,
    closed_form_counts,
    cluster_vertices,
    divisibility_check,
    table_row,
)

__all__ = [
    "AffineChart",
    "AffineMap",
    "Certificate",
    "ClassifySummary",
    "ClusterPartition",
    "CoincidenceGraph",
    "Containment",
    "CountRow",
    "DivisibilityReport",
    "Face",
    "FacetLabel",
    "GenericMatrix",
    "GeometryError",
    "HRep",
    "HomPolytope",
    "IdentityCheckReport",
    "Inequality",
    "InfeasibleError",
    "LowerDimensionalError",
    "MapClassification",
    "OutsideHullError",
    "ParseError",
    "PartitionMismatchError",
    "Polytope",
    "TableDiagnostics",
    "UnboundedError",
    "VRep",
    "bipyramid",
    "build_generic_matrix",
    "build_hom",
    "canonical_encoding",
    "certify_nonvanishing",
    "chart_project",
    "classify_all",
    "closed_form_counts",
    "cluster_vertices",
    "contains_point",
    "cross_polytope",
    "cube",
    "divisibility_check",
    "dual",
    "enumerate_graphs",
    "enumerate_vertex_maps",
    "evaluate_matrix",
    "f_vector",
    "face_lattice",
    "hom_identity_check",
    "hrep_to_vrep",
    "image_polytope",
    "is_deflation",
    "is_face_collapse",
    "is_simple_vertex",
    "is_vertex_map",
    "join",
    "map_rank",
    "poly_eval",
    "polytope_dim",
    "product",
    "rank1_polygon_count",
    "read_labels",
    "read_polytope",
    "regular_ngon",
    "reject_reason",
    "simplex",
    "standard",
    "surj_inj_factorize",
    "surjective_onto",
    "symbolic_determinant",
    "table_row",
    "tensor",
    "vrep_to_hrep",
    "write_hrep",
    "write_labels",
    "write_vrep",
]
