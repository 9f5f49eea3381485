"""Modelo contínuo: fluxo, fontes, velocidade característica e soluções estáticas."""

from dsburgers.model.equation import (
    characteristic_speed,
    conservative_flux,
    flux_coefficient,
    source,
)
from dsburgers.model.models import SourceForm, StaticSolutionSpec
from dsburgers.model.static import balance_residual, static_residual, static_solution

__all__ = [
    "SourceForm",
    "StaticSolutionSpec",
    "balance_residual",
    "characteristic_speed",
    "conservative_flux",
    "flux_coefficient",
    "source",
    "static_residual",
    "static_solution",
]
