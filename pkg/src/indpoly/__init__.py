"""Exact independence polynomials and the well-covered graph hierarchy."""
from __future__ import annotations

__version__ = "0.1.0"

from ._backend import BACKEND
from .bounds import (
    BoundReport,
    TheoremId,
    Window,
    WindowKind,
    check_bounds,
    check_corona_k2_bounds,
    check_one_well_covered_bounds,
    check_quasi_regular_bounds,
    check_quasi_regularizable_bounds,
    check_very_well_covered_bounds,
    check_well_covered_bounds,
    check_well_covered_prefix,
    roller_coaster_window,
)
from .classification import (
    ClassificationRecord,
    classify,
    extension_property,
    extension_witnesses,
    in_w2,
    lambda_star,
    neighborhood_profile,
)
from .enumeration import (
    CoefficientSequence,
    LevelCount,
    brute_force_coefficients,
    independence_coefficients,
    independence_number,
    level_double_count,
    maximal_independent_sets,
)
from .formats import from_edge_list, from_graph6, to_edge_list, to_graph6
from .graph import (
    Graph,
    complete,
    components,
    corona,
    cycle,
    delete_vertex,
    disjoint_union,
    empty,
    is_connected,
    neighborhood,
    path,
    star,
)
from .graphspec import parse_graph_spec
from .polynomial import (
    IntPolynomial,
    RootCensus,
    ShapeProfile,
    corona_compose,
    real_root_census,
    shape_profile,
)
from .survey import SurveyConfig, WindowSignature, pattern_signature, run_survey
