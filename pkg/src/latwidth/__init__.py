"""Exact computations on 2D lattice polygons: lattice width, lattice size,
canonical forms under unimodular equivalence, and the enumeration and
classification of inclusion-minimal polygons of a given width."""

from .bounds import (
    BoundReport,
    doubled_volume_bound,
    point_bound,
    verify_point_bound,
    verify_volume_bound,
)
from .canonical import CanonicalForm, are_equivalent, canonical_form
from .classify import (
    EnumerationStats,
    MinimalClass,
    TypeParams,
    brute_force_minimal,
    classify_polygon,
    enumerate_minimal,
    enumerate_minimal_with_stats,
    four_direction_quadrangle,
    generate,
    hexagon,
    is_inscribed_in_hexagon,
    iter_convex_polygons,
    iter_full_width_polygons,
    iter_type_params,
)
from .core import (
    EmptyInput,
    NotAVertex,
    NotUnimodular,
    OutOfRange,
    ParamOutOfRange,
    Polygon,
    UnimodularMap,
    ZeroVector,
    apply_map,
    boundary_point_count,
    compose_maps,
    contains_point,
    contains_polygon,
    convex_hull,
    doubled_area,
    invert_map,
    lattice_points,
    make_primitive,
    polygon_from_json,
    polygon_to_json,
    translation,
)
from .minimal import (
    MinimalityReport,
    drop_vertex,
    is_minimal,
    upsilon,
    upsilon_lemma_witness,
)
from .width import (
    SizeResult,
    WidthResult,
    embed_in_square,
    lattice_size_square,
    lattice_width,
    normalize_sign,
    width_in_direction,
)

__all__ = [
    "BoundReport",
    "CanonicalForm",
    "EmptyInput",
    "EnumerationStats",
    "MinimalClass",
    "MinimalityReport",
    "NotAVertex",
    "NotUnimodular",
    "OutOfRange",
    "ParamOutOfRange",
    "Polygon",
    "SizeResult",
    "TypeParams",
    "UnimodularMap",
    "WidthResult",
    "ZeroVector",
    "apply_map",
    "are_equivalent",
    "boundary_point_count",
    "brute_force_minimal",
    "canonical_form",
    "classify_polygon",
    "compose_maps",
    "contains_point",
    "contains_polygon",
    "convex_hull",
    "doubled_area",
    "doubled_volume_bound",
    "drop_vertex",
    "embed_in_square",
    "enumerate_minimal",
    "enumerate_minimal_with_stats",
    "four_direction_quadrangle",
    "generate",
    "hexagon",
    "invert_map",
    "is_inscribed_in_hexagon",
    "is_minimal",
    "iter_convex_polygons",
    "iter_full_width_polygons",
    "iter_type_params",
    "lattice_points",
    "lattice_size_square",
    "lattice_width",
    "make_primitive",
    "normalize_sign",
    "point_bound",
    "polygon_from_json",
    "polygon_to_json",
    "translation",
    "upsilon",
    "upsilon_lemma_witness",
    "verify_point_bound",
    "verify_volume_bound",
    "width_in_direction",
]

__version__ = "0.1.0"
