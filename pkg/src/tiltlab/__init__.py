"""Exact numerics for tilt stability conditions on polarized surfaces."""

from .curve import (
    CurveContext,
    CurveKClass,
    complement_class,
    curve_chi,
    curve_genus,
    flenner_min_degree,
    restrict_class,
    seshadri_degree,
)
from .kclass import (
    KClass,
    ToddClass,
    curve_class,
    euler_pairing,
    hyperplane_class,
    k_mul,
    point_class,
    structure_sheaf,
    tensor_line,
    twist_B,
)
from .lattice import S1, S2, DivisorClass, SurfaceData, intersect, validate_surface
from .moduli import (
    MockSheaf,
    PolystableObject,
    StableFactor,
    s_equivalent,
    sigma_graded,
    total_class,
    uhlenbeck_equivalent,
    validate_polystable,
)
from .tilt import (
    INF,
    CentralChargeValue,
    StabilityParams,
    central_charge,
    discriminant,
    mu_B,
    tilt_slope,
    vertical_beta,
    vertical_locus_kind,
)
from .vertical import (
    VerticalWallData,
    chi_with_u,
    curve_power_identity,
    descent_weights,
    proportionality_check,
    u_class,
    w_class,
    wz_multiplier,
)
from .walls import Bounds, Region, Wall, check_nested, enumerate_candidate_walls, numerical_wall, wall_contains

__version__ = "0.1.0"
