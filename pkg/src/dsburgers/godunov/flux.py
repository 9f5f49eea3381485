"""Fluxo numérico de Godunov para o fluxo convexo v²/2."""

import numpy as np

from dsburgers.model.equation import ArrayLike


def burgers_flux(v: ArrayLike) -> ArrayLike:
    """Fluxo físico f(v) = v²/2."""
    return 0.5 * v * v


def riemann_flux(v1: ArrayLike, v2: ArrayLike) -> ArrayLike:
    """
    Fluxo de Godunov exato f(v1, v2) para o problema de Riemann de v²/2.

    - v1 > v2 (choque): v1²/2 se v1 + v2 >= 0, senão v2²/2
    - v1 <= v2 (rarefação): v1²/2 se v1 > 0, v2²/2 se v2 < 0, 0 se v1 <= 0 <= v2

    No choque estacionário (v1 + v2 = 0) os dois ramos coincidem.
    """
    v1 = np.asarray(v1, dtype=float)
    v2 = np.asarray(v2, dtype=float)
    shock = v1 > v2

    shock_flux = np.where(v1 + v2 >= 0.0, burgers_flux(v1), burgers_flux(v2))
    rarefaction_flux = np.where(
        v1 > 0.0,
        burgers_flux(v1),
        np.where(v2 < 0.0, burgers_flux(v2), 0.0),
    )
    result = np.where(shock, shock_flux, rarefaction_flux)
    return float(result) if result.ndim == 0 else result
