"""Componentes da métrica de de Sitter em coordenadas estáticas."""

import math

from dsburgers.errors import AngularDegeneracyError, HorizonSingularityError
from dsburgers.geometry.models import Coordinates, MetricComponents, Params

# sin(π) em ponto flutuante não é exatamente zero
ANGULAR_TOLERANCE = 1e-12


def lapse_factor(params: Params, r: float) -> float:
    """Retorna 1 - Λr², o fator que aparece em g00 e g11."""
    return 1.0 - params.lam * r * r


def metric_covariant(params: Params, coords: Coordinates) -> MetricComponents:
    """
    Calcula as componentes covariantes g_{ij} da métrica de de Sitter.

    g = -(1-Λr²)dt² + dr²/(1-Λr²) + r²(dθ² + sin²θ dφ²)

    Raises:
        HorizonSingularityError: se Λr² = 1 (g11 indefinido)
    """
    factor = lapse_factor(params, coords.r)
    if factor == 0.0:
        raise HorizonSingularityError(
            f"Métrica singular no horizonte: Λr² = 1 (Λ={params.lam}, r={coords.r})"
        )

    r2 = coords.r * coords.r
    sin_theta = math.sin(coords.theta)
    return MetricComponents(
        g00=-factor,
        g11=1.0 / factor,
        g22=r2,
        g33=r2 * sin_theta * sin_theta,
    )


def metric_contravariant(params: Params, coords: Coordinates) -> MetricComponents:
    """
    Calcula as componentes contravariantes g^{ij}, inversa da métrica covariante.

    Raises:
        AngularDegeneracyError: se r = 0 ou sin θ = 0
        HorizonSingularityError: se Λr² = 1
    """
    sin_theta = math.sin(coords.theta)
    if coords.r == 0.0 or abs(sin_theta) < ANGULAR_TOLERANCE:
        raise AngularDegeneracyError(
            f"Métrica inversa degenerada em r={coords.r}, θ={coords.theta}"
        )

    factor = lapse_factor(params, coords.r)
    if factor == 0.0:
        raise HorizonSingularityError(
            f"Métrica singular no horizonte: Λr² = 1 (Λ={params.lam}, r={coords.r})"
        )

    r2 = coords.r * coords.r
    return MetricComponents(
        g00=1.0 / (params.lam * r2 - 1.0),
        g11=factor,
        g22=1.0 / r2,
        g33=1.0 / (r2 * sin_theta * sin_theta),
    )
