"""Maximum-diameter pure simplicial complexes and pseudo-manifolds."""

from .complex import (
    DualShape,
    PureComplex,
    classify_dual,
    diameter,
    dual_graph,
    hirsch_upper_bound,
    is_normal,
    is_pseudo_manifold,
    is_semi_duoid,
    is_strongly_connected,
    parse_complex,
    ridge_index,
    serialize_complex,
)
from .constructions import (
    build_lfsr_complex,
    corridor_frame,
    double_closed_corridor,
    double_corridor,
    drop_facet,
)
from .field import FieldElement, FieldSpec, canonical_index, element_of_index, make_field
from .lfsr import lfsr_generate, lfsr_period, window_coverage
from .primpoly import (
    Polynomial,
    count_primitive,
    factorize_and_phi,
    find_primitive_all_nonzero,
    is_irreducible,
    is_primitive,
)

__version__ = "0.1.0"

__all__ = [
    "FieldElement",
    "FieldSpec",
    "canonical_index",
    "element_of_index",
    "make_field",
    "lfsr_generate",
    "lfsr_period",
    "window_coverage",
    "build_lfsr_complex",
    "classify_dual",
    "corridor_frame",
    "count_primitive",
    "diameter",
    "double_closed_corridor",
    "double_corridor",
    "drop_facet",
    "dual_graph",
    "DualShape",
    "factorize_and_phi",
    "find_primitive_all_nonzero",
    "hirsch_upper_bound",
    "is_irreducible",
    "is_normal",
    "is_primitive",
    "is_pseudo_manifold",
    "is_semi_duoid",
    "is_strongly_connected",
    "parse_complex",
    "Polynomial",
    "PureComplex",
    "ridge_index",
    "serialize_complex",
]
