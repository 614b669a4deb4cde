"""Capillary menisci between two partially immersed vertical plates:
profiles, barrier solutions, plate forces and configuration regions."""

from .barriers import (
    BarrierAtlas,
    BarrierKind,
    Regime,
    atlas,
    barrier,
    closed_form_I,
    critical_separations,
    psi1_zero,
    psi10,
)
from .classify import RegionReport, classify_solution, connectivity, region_map, regime
from .curve import ProfileCurve
from .errors import (
    BracketError,
    BranchSplitError,
    CapillaryError,
    DomainError,
    NoJoiningSolution,
    NumericalError,
)
from .estimates import (
    attraction_threshold,
    height_bounds_generic,
    height_jump,
    symmetric_height_bound,
)
from .forces import (
    ForceSweep,
    NeighborClass,
    admissible_ranges,
    extremal_position,
    force_of_curve,
    force_physical,
    sweep_force,
    symmetric_force_limit,
)
from .numerics import OdeState, Quadrant, quad_singular, shoot, solve_monotone
from .profile import (
    ForceValue,
    PhysicalParams,
    PlateConfig,
    arc,
    check_noncrossing,
    crossing_angle_symmetric,
    first_integral,
    height_at,
    solve_join,
)

__version__ = "0.1.0"
