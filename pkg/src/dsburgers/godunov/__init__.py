"""Solver de volumes finitos de Godunov (primeira e segunda ordem)."""

from dsburgers.godunov.flux import burgers_flux, riemann_flux
from dsburgers.godunov.initial import (
    RAREFACTION_PRESET,
    SHOCK_PRESET,
    ConstantProfile,
    FileInitialCondition,
    InitialCondition,
    ProfileInitialCondition,
    RiemannInitialCondition,
    SineProfile,
    SmoothProfile,
    StaticInitialCondition,
)
from dsburgers.godunov.models import (
    BoundaryCondition,
    DtMode,
    Grid,
    Limiter,
    SchemeConfig,
    Snapshot,
    State,
)
from dsburgers.godunov.reconstruction import (
    apply_bc,
    balance_inflow,
    minmod,
    reconstruct,
    static_extrapolation,
)
from dsburgers.godunov.runner import advance, initial_state, run
from dsburgers.godunov.scheme import (
    cfl_ratio,
    compute_dt,
    half_step,
    max_characteristic_factor,
    step,
    validate_fixed_dt,
)

__all__ = [
    "RAREFACTION_PRESET",
    "SHOCK_PRESET",
    "BoundaryCondition",
    "ConstantProfile",
    "DtMode",
    "FileInitialCondition",
    "Grid",
    "InitialCondition",
    "Limiter",
    "ProfileInitialCondition",
    "RiemannInitialCondition",
    "SchemeConfig",
    "SineProfile",
    "SmoothProfile",
    "Snapshot",
    "State",
    "StaticInitialCondition",
    "advance",
    "apply_bc",
    "balance_inflow",
    "burgers_flux",
    "cfl_ratio",
    "compute_dt",
    "half_step",
    "initial_state",
    "max_characteristic_factor",
    "minmod",
    "reconstruct",
    "riemann_flux",
    "run",
    "static_extrapolation",
    "step",
    "validate_fixed_dt",
]
