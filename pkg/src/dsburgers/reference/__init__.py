"""Oráculos independentes e ferramentas de análise."""

from dsburgers.reference.analysis import (
    ErrorReport,
    error_norms,
    front_position,
    observed_order,
)
from dsburgers.reference.exact import RiemannData, exact_riemann_classical, exact_smooth_classical
from dsburgers.reference.plain import plain_burgers_step

__all__ = [
    "ErrorReport",
    "RiemannData",
    "error_norms",
    "exact_riemann_classical",
    "exact_smooth_classical",
    "front_position",
    "observed_order",
    "plain_burgers_step",
]
