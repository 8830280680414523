"""Combinatorial simple 3-polytopes and edge-graph truncation.

The package models simple 3-polytopes as rotation systems on cubic
planar graphs, cuts edge subgraphs off them as pure combinatorial
surgery, decides flagness by two independent routes, and applies the
whole-graph cut that realizes p-vectors of flag polytopes.
"""

from .errors import (
    AsymmetricAdjacency,
    BadHeader,
    EulerViolation,
    HasTriangles,
    LoopOrMultiEdge,
    NonSimpleInput,
    NonSimpleResult,
    Not3Connected,
    NotCubic,
    ParseError,
    PolytopeError,
    TooLarge,
    TruncatedRecord,
    UnknownName,
    ValidationError,
)
from .polytope import (
    MAX_VERTICES,
    Polytope3,
    PVector,
    build_from_rotation,
    canonical_form,
    check_star_identity,
    faces_adjacent,
    is_isomorphic,
    p_vector,
    three_connected_by_pair_deletion,
    triple_vertex,
)
from .flags import (
    Belt3,
    MissingFace,
    enumerate_3belts,
    is_flag,
    is_flag_oracle,
    missing_faces,
)
from .truncation import (
    EdgeSubgraph,
    PredictedSizes,
    TruncationResult,
    admits_simple_truncation,
    flag_criterion,
    predicted_face_sizes,
    truncate,
    valency_profile,
)
from .eberhard import (
    ScanMatch,
    SparsePSequence,
    check_flag_sequence,
    flagify,
    scan_for_sequence,
    transformed_pvector,
)
from .catalog import CatalogEntry, catalog, catalog_entries
from .io import (
    PlanarCodeScan,
    parse_canonical_text,
    parse_planar_code,
    write_canonical_text,
    write_planar_code,
)

__version__ = "0.1.0"

__all__ = [
    "AsymmetricAdjacency",
    "BadHeader",
    "Belt3",
    "CatalogEntry",
    "EdgeSubgraph",
    "EulerViolation",
    "HasTriangles",
    "LoopOrMultiEdge",
    "MAX_VERTICES",
    "MissingFace",
    "NonSimpleInput",
    "NonSimpleResult",
    "Not3Connected",
    "NotCubic",
    "ParseError",
    "PlanarCodeScan",
    "Polytope3",
    "PolytopeError",
    "PredictedSizes",
    "PVector",
    "ScanMatch",
    "SparsePSequence",
    "TooLarge",
    "TruncatedRecord",
    "TruncationResult",
    "UnknownName",
    "ValidationError",
    "admits_simple_truncation",
    "build_from_rotation",
    "canonical_form",
    "catalog",
    "catalog_entries",
    "check_flag_sequence",
    "check_star_identity",
    "enumerate_3belts",
    "faces_adjacent",
    "flag_criterion",
    "flagify",
    "is_flag",
    "is_flag_oracle",
    "is_isomorphic",
    "missing_faces",
    "p_vector",
    "parse_canonical_text",
    "parse_planar_code",
    "predicted_face_sizes",
    "scan_for_sequence",
    "three_connected_by_pair_deletion",
    "transformed_pvector",
    "triple_vertex",
    "truncate",
    "valency_profile",
    "write_canonical_text",
    "write_planar_code",
]
