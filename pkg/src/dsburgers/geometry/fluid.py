"""Quadrivelocidade e tensor energia-momento do fluido sem pressão."""

import math

from dsburgers.errors import HorizonSingularityError, SuperluminalError
from dsburgers.geometry.metric import lapse_factor
from dsburgers.geometry.models import FourVelocity, Params, StressEnergy


def _validate(params: Params, r: float, v: float) -> float:
    """Valida |v| < c e Λr² < 1, retornando 1 - Λr²."""
    if abs(v) >= params.c:
        raise SuperluminalError(f"Velocidade superluminal: |v|={abs(v)} >= c={params.c}")
    factor = lapse_factor(params, r)
    if factor <= 0.0:
        raise HorizonSingularityError(
            f"Ponto no horizonte ou além dele: Λr²={params.lam * r * r} >= 1"
        )
    return factor


def fluid_four_velocity(params: Params, r: float, v: float) -> FourVelocity:
    """
    Calcula (u^0, u^1) a partir da velocidade v = c·u¹ / ((1-Λr²)·u⁰).

    Convenção de sinais: u^0 > 0 (orientado para o futuro) e sign(u^1) = sign(v).

    Raises:
        SuperluminalError: se |v| >= c
        HorizonSingularityError: se Λr² >= 1
    """
    factor = _validate(params, r, v)
    gap = math.sqrt(params.c * params.c - v * v)
    return FourVelocity(
        u0=params.c / (math.sqrt(factor) * gap),
        u1=v * math.sqrt(factor) / gap,
    )


def stress_energy_pressureless(params: Params, r: float, v: float, rho: float) -> StressEnergy:
    """
    Componentes T^{00}, T^{01}, T^{11} para poeira (p = 0).

    Raises:
        SuperluminalError: se |v| >= c
        HorizonSingularityError: se Λr² >= 1
        ValueError: se rho < 0
    """
    factor = _validate(params, r, v)
    if rho < 0:
        raise ValueError(f"Densidade precisa ser não negativa, recebida {rho}")

    c2 = params.c * params.c
    gap = c2 - v * v
    return StressEnergy(
        t00=rho * c2 * c2 / (gap * factor),
        t01=params.c * v * rho * c2 / gap,
        t11=c2 * factor * v * v * rho / gap,
    )
