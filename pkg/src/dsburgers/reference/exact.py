"""Soluções exatas da equação de Burgers clássica (Λ = 0)."""

from dataclasses import dataclass

import numpy as np

from dsburgers.errors import PreShockError
from dsburgers.godunov.initial import SmoothProfile
from dsburgers.model.equation import ArrayLike

# Bisseção das características: largura de colchete e máximo de iterações
BISECTION_TOLERANCE = 1e-12
BISECTION_MAX_ITER = 200


@dataclass(frozen=True)
class RiemannData:
    """Dado de Riemann global: vl à esquerda de r0, vr à direita."""

    vl: float
    vr: float
    r0: float

    def __post_init__(self):
        if not 0.0 <= self.r0 <= 1.0:
            raise ValueError(f"r0 precisa estar em [0, 1], recebido {self.r0}")

    @property
    def shock_speed(self) -> float:
        """Velocidade de Rankine-Hugoniot s = (vl + vr)/2."""
        return 0.5 * (self.vl + self.vr)


def exact_riemann_classical(data: RiemannData, t: float, r: ArrayLike) -> ArrayLike:
    """
    Solução de entropia do problema de Riemann para v²/2.

    - vl > vr: choque em r0 + s·t
    - vl <= vr: leque de rarefação com valor (r - r0)/t entre r0 + vl·t e r0 + vr·t
    """
    if t < 0:
        raise ValueError(f"t precisa ser >= 0, recebido {t}")
    x = np.asarray(r, dtype=float)

    if t == 0:
        result = np.where(x < data.r0, data.vl, data.vr)
    elif data.vl > data.vr:
        result = np.where(x < data.r0 + data.shock_speed * t, data.vl, data.vr)
    else:
        fan = np.clip((x - data.r0) / t, data.vl, data.vr)
        result = np.where(
            x < data.r0 + data.vl * t,
            data.vl,
            np.where(x > data.r0 + data.vr * t, data.vr, fan),
        )
    return float(result) if result.ndim == 0 else result


def exact_smooth_classical(profile: SmoothProfile, t: float, r: ArrayLike) -> ArrayLike:
    """
    Resolve v = v0(r - v·t) por bisseção, antes da formação de choque.

    O colchete [min v0 - 1, max v0 + 1] sempre contém a raiz única enquanto
    t < 1/max(-v0').

    Raises:
        PreShockError: se t não for anterior ao primeiro choque
    """
    if t < 0:
        raise ValueError(f"t precisa ser >= 0, recebido {t}")
    shock_time = profile.breaking_time()
    if t >= shock_time:
        raise PreShockError(
            f"t={t} não é anterior à formação de choque (t_choque={shock_time:.6g})"
        )

    x = np.asarray(r, dtype=float)
    if t == 0:
        result = np.asarray(profile(x), dtype=float)
        return float(result) if result.ndim == 0 else result

    low_bound, high_bound = profile.bounds()
    low = np.full(x.shape, low_bound - 1.0)
    high = np.full(x.shape, high_bound + 1.0)

    for _ in range(BISECTION_MAX_ITER):
        mid = 0.5 * (low + high)
        residual = mid - profile(x - mid * t)
        below = residual < 0.0
        low = np.where(below, mid, low)
        high = np.where(below, high, mid)
        if np.max(high - low) < BISECTION_TOLERANCE:
            break

    result = 0.5 * (low + high)
    return float(result) if result.ndim == 0 else result
