"""gaussdiff: exact Gaussian-measure simple functions, divided differences,
and a verification harness for curves into non-locally convex spaces."""

from .measure import (
    GRID,
    RADIAL,
    FamilyMismatchError,
    GridRegion,
    Interval,
    RadialRegion,
    Region,
    annulus,
    disk,
    empty_region,
    full_plane,
    horizontal_strip,
    left_half_plane,
    lower_left_quadrant,
    mu_grid,
    mu_radial,
    nu_mass,
    rect,
    region_complement,
    region_contains,
    region_difference,
    region_from_json,
    region_intersect,
    region_measure,
    region_symdiff,
    region_to_json,
    region_union,
    vertical_strip,
)
from .simplefn import (
    SimpleFunction,
    SupportBound,
    gauge_in_measure,
    indicator,
    l0_gauge,
    linear_combine,
    lp_gauge,
    simple_function_to_json,
    supported_in,
    wk_member,
)
from .divdiff import (
    CurveMap,
    GridBounds,
    LimitReport,
    NodeTuple,
    RadialBounds,
    RepeatedNodeError,
    ShrinkSchedule,
    classify_trace,
    coefficient_distance,
    derivative_by_limit,
    divided_diff,
    divided_diff_lagrange,
    node_bounds,
    scalar_curve,
    support_bound_of,
    symmetry_check,
)
from .curves import (
    ANNULUS_CURVE,
    DEFAULT_P,
    HALFPLANE_CURVE,
    QUADRANT_CURVE,
    ExampleId,
    annulus_map,
    coerce_example,
    curve_for,
    family_for,
    gauge_for,
    halfplane_map,
    quadrant_map,
)
from .montecarlo import mc_measure, plane_samples, region_mask
from .experiments import (
    BLOWUP_C,
    DIVERGENT_AS_EXPECTED,
    EXPERIMENTS,
    FAIL,
    INCONCLUSIVE,
    PASS,
    BlowupConstants,
    ConfigError,
    ExperimentConfig,
    ExperimentReport,
    exp_c1_not_c2,
    exp_identity_theorem_failure,
    exp_measure_identities,
    exp_real_restriction,
    exp_smoothness,
    exp_taylor_failure,
    run_experiment,
    verify_all,
)

__version__ = "0.1.0"
