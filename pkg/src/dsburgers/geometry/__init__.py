"""Geometria de de Sitter: métrica, Christoffel, quadrivelocidade e tensor energia-momento."""

from dsburgers.geometry.christoffel import christoffel_closed_form, christoffel_numeric
from dsburgers.geometry.fluid import fluid_four_velocity, stress_energy_pressureless
from dsburgers.geometry.metric import metric_contravariant, metric_covariant
from dsburgers.geometry.models import (
    ChristoffelTable,
    Coordinates,
    FourVelocity,
    MetricComponents,
    Params,
    StressEnergy,
)

__all__ = [
    "ChristoffelTable",
    "Coordinates",
    "FourVelocity",
    "MetricComponents",
    "Params",
    "StressEnergy",
    "christoffel_closed_form",
    "christoffel_numeric",
    "fluid_four_velocity",
    "metric_contravariant",
    "metric_covariant",
    "stress_energy_pressureless",
]
