"""Exact polytope analysis of Bell tests with measurement-dependent local models.

The package computes, in exact rational arithmetic, the correlation polytopes
reachable when a local hidden-variable model is allowed to bias the choice of
measurement settings within per-setting bounds l <= P(xy|lambda) <= h: vertex
and facet enumeration, the inequality catalog on the nonsignaling
uniform-input slice, the CHSH trade-off, and the quantum side (two-qubit Born
rule, the Hardy-type construction that witnesses arbitrarily small input
dependence).
"""

from .constraints import (
    TABLE_BASIS_LABELS,
    ConstraintSet,
    canonical_table_row,
    from_table_basis,
    nonsignaling_equalities,
    slice_equalities,
    table_point_to_vector,
    to_table_basis,
    uniform_input_equalities,
    vector_to_table_point,
)
from .inequalities import (
    TABLE_FAMILY_COUNT,
    MdlChshBound,
    MdlInequality,
    chsh_critical_h,
    chsh_full_functional,
    chsh_lp_maximum,
    chsh_value,
    critical_h,
    family_lp_maximum,
    golden_inequality,
    mdl_chsh_bound,
    table1_family,
)
from .mdl import (
    DeterministicStrategy,
    InvalidBoundsError,
    SourceBounds,
    input_polytope_vertices,
    input_vertex_distributions,
    local_vertices,
    mdl_vertices,
    min_entropy_bounds,
)
from .pipeline import (
    RestrictedPolytope,
    classify_table_rows,
    match_catalog,
    nonsignaling_vertices,
    random_h_values,
    restricted_mdl_polytope,
    scan_table_validity,
    table_row_orbit_representative,
)
from .polytope import (
    AffineSubspace,
    HRepresentation,
    InconsistentEqualitiesError,
    LinearEquality,
    LinearInequality,
    UnboundedPolytopeError,
    VRepresentation,
    facets_to_vertices,
    format_hrep,
    format_vrep,
    lp_optimize,
    membership,
    optimize_over_vertices,
    parse_polytope_file,
    remove_redundant,
    restrict_to_subspace,
    vertices_to_facets,
)
from .quantum import (
    MeasurementSetup,
    TwoQubitState,
    best_family_violation,
    born_rule,
    evaluate_mdl_violation,
    golden_setup,
    golden_theta,
    nonsignaling_residuals,
    optimal_chsh_setup,
    plane_setup,
    state_from_schmidt,
)
from .scenario import (
    CHSH_SCENARIO,
    ConditionalDistribution,
    FullDistribution,
    InputDistribution,
    Scenario,
    compose,
    uniform_inputs,
)
from .symmetry import (
    Family,
    Relabeling,
    apply_to_distribution,
    apply_to_inequality,
    classify_families,
    orbit,
    relabeling_group,
)

__version__ = "0.1.0"

__all__ = [
    "AffineSubspace",
    "CHSH_SCENARIO",
    "ConditionalDistribution",
    "ConstraintSet",
    "DeterministicStrategy",
    "Family",
    "FullDistribution",
    "HRepresentation",
    "InconsistentEqualitiesError",
    "InputDistribution",
    "InvalidBoundsError",
    "LinearEquality",
    "LinearInequality",
    "MdlChshBound",
    "MdlInequality",
    "MeasurementSetup",
    "Relabeling",
    "RestrictedPolytope",
    "Scenario",
    "SourceBounds",
    "TABLE_BASIS_LABELS",
    "TABLE_FAMILY_COUNT",
    "TwoQubitState",
    "UnboundedPolytopeError",
    "VRepresentation",
    "apply_to_distribution",
    "apply_to_inequality",
    "best_family_violation",
    "born_rule",
    "canonical_table_row",
    "chsh_critical_h",
    "chsh_full_functional",
    "chsh_lp_maximum",
    "chsh_value",
    "classify_families",
    "classify_table_rows",
    "compose",
    "critical_h",
    "evaluate_mdl_violation",
    "facets_to_vertices",
    "family_lp_maximum",
    "format_hrep",
    "format_vrep",
    "from_table_basis",
    "golden_inequality",
    "golden_setup",
    "golden_theta",
    "input_polytope_vertices",
    "input_vertex_distributions",
    "local_vertices",
    "lp_optimize",
    "match_catalog",
    "mdl_chsh_bound",
    "mdl_vertices",
    "membership",
    "min_entropy_bounds",
    "nonsignaling_equalities",
    "nonsignaling_residuals",
    "nonsignaling_vertices",
    "optimal_chsh_setup",
    "optimize_over_vertices",
    "orbit",
    "parse_polytope_file",
    "plane_setup",
    "random_h_values",
    "relabeling_group",
    "remove_redundant",
    "restrict_to_subspace",
    "restricted_mdl_polytope",
    "scan_table_validity",
    "slice_equalities",
    "state_from_schmidt",
    "table1_family",
    "table_point_to_vector",
    "table_row_orbit_representative",
    "to_table_basis",
    "uniform_input_equalities",
    "uniform_inputs",
    "vector_to_table_point",
    "vertices_to_facets",
]
