"""Soluções estáticas do modelo e resíduo do balanço estacionário."""

from typing import Callable

import numpy as np

from dsburgers.errors import StaticDomainError
from dsburgers.geometry.models import Params
from dsburgers.model.equation import ArrayLike, conservative_flux, flux_coefficient, source
from dsburgers.model.models import SourceForm, StaticSolutionSpec

Profile = Callable[[ArrayLike], ArrayLike]


def static_solution(params: Params, spec: StaticSolutionSpec, r: ArrayLike) -> ArrayLike:
    """
    Retorna v(r) = sign·√(c² - N(1-Λr²)).

    Raises:
        StaticDomainError: se o radicando for negativo em algum r
    """
    radicand = params.c * params.c - spec.n_param * flux_coefficient(params, r)
    if np.any(np.asarray(radicand) < 0):
        raise StaticDomainError(
            f"Radicando negativo na solução estática (N={spec.n_param}, Λ={params.lam})"
        )
    return spec.sign * np.sqrt(radicand)


def balance_residual(params: Params, profile: Profile, r: ArrayLike, h: float) -> ArrayLike:
    """
    Resíduo por diferenças centrais de ∂r((1-Λr²)v²/2) - Λr(c² - 2v²).

    Nulo (a menos de O(h²)) exatamente quando o perfil é uma solução estática.
    """
    upper = conservative_flux(params, r + h, profile(r + h))
    lower = conservative_flux(params, r - h, profile(r - h))
    return (upper - lower) / (2.0 * h) - source(params, r, profile(r), SourceForm.CONSERVATIVE)


def static_residual(
    params: Params,
    spec: StaticSolutionSpec,
    r: ArrayLike,
    h: float = 1e-5,
) -> ArrayLike:
    """Resíduo do balanço estacionário avaliado sobre static_solution."""
    return balance_residual(params, lambda x: static_solution(params, spec, x), r, h)
