"""
Esquema de Godunov de primeira e segunda ordem para o modelo em de Sitter.

Ordem 1:

    v_j^{n+1} = v_j^n - (dt/dr)(b_{j+1/2} f(v_j, v_{j+1}) - b_{j-1/2} f(v_{j-1}, v_j)) + dt·S_j^n

Ordem 2 (MUSCL-Hancock): reconstrução limitada, meio passo preditor dentro de
cada célula, problemas de Riemann nas interfaces com os valores preditos e
passo completo com a fonte avaliada em t^{n+1/2}. Na fronteira r = 0 a fantasma
e a célula 0 são reconstruídas ao longo da solução estática local
(balance_inflow).
"""

import numpy as np

from dsburgers.errors import CFLViolationError, InstabilityError
from dsburgers.geometry.models import Params
from dsburgers.godunov.flux import burgers_flux, riemann_flux
from dsburgers.godunov.models import GHOST_LAYERS, DtMode, Grid, SchemeConfig, State
from dsburgers.godunov.reconstruction import apply_bc, balance_inflow, reconstruct
from dsburgers.model.equation import flux_coefficient, source

# Piso de |v| no teto de dt por velocidade característica
SPEED_FLOOR = 1e-12


def max_characteristic_factor(grid: Grid, params: Params) -> float:
    """max_j |1 - Λ r²_{j±1/2}| sobre as interfaces da malha."""
    return float(np.max(np.abs(flux_coefficient(params, grid.interfaces))))


def cfl_ratio(dt: float, grid: Grid, params: Params) -> float:
    """Lado esquerdo da condição CFL: (dt/dr)·max_j |1 - Λr²_{j±1/2}|."""
    return dt / grid.dr * max_characteristic_factor(grid, params)


def validate_fixed_dt(grid: Grid, params: Params, config: SchemeConfig) -> None:
    """
    Garante que o dt fixo respeita a condição CFL.

    Raises:
        CFLViolationError: se (dt/dr)·max|1-Λr²| > 1
    """
    if config.dt_mode != DtMode.FIXED:
        return
    ratio = cfl_ratio(config.fixed_dt, grid, params)
    if ratio > 1.0:
        raise CFLViolationError(
            f"dt={config.fixed_dt} viola a condição CFL: (dt/dr)·max|1-Λr²| = {ratio:.6g} > 1",
            key="dt",
        )


def compute_dt(
    state: State,
    grid: Grid,
    params: Params,
    config: SchemeConfig,
    t_end: float | None = None,
) -> float:
    """
    Calcula o passo de tempo.

    Modo ADAPTIVE: dt = cfl·dr / max|1-Λr²| nas interfaces, limitado também por
    cfl·dr / max_j(|b_j|·max(|v_j|, SPEED_FLOOR)), já que a velocidade real é b·v.
    Modo FIXED: o dt configurado.

    Com t_end, o passo nunca ultrapassa t_end.
    """
    if config.dt_mode == DtMode.FIXED:
        dt = config.fixed_dt
    else:
        faces = np.abs(flux_coefficient(params, grid.interfaces))
        factor = float(np.max(faces))
        if factor == 0.0:
            dt = 0.1 * (t_end - state.time) if t_end is not None else config.max_dt
        else:
            dt = config.cfl_number * grid.dr / factor
            cell_factor = np.maximum(faces[:-1], faces[1:])
            speed = float(np.max(cell_factor * np.maximum(np.abs(state.v), SPEED_FLOOR)))
            if speed > 0.0:
                dt = min(dt, config.cfl_number * grid.dr / speed)

    if t_end is not None:
        dt = min(dt, t_end - state.time)
    return dt


def half_step(
    pairs: tuple[np.ndarray, np.ndarray],
    grid: Grid,
    params: Params,
    config: SchemeConfig,
    dt: float,
    averages: np.ndarray | None = None,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Avança os pares reconstruídos de meio passo (preditor MUSCL-Hancock).

        vX^{n+1/2} = vX - (dt/2dr)(b_R f(vR) - b_L f(vL)) + (dt/2)·S(r_i, v_i)

    f(v) = v²/2 é avaliado diretamente nas faces da própria célula, b nas
    interfaces geométricas e S no centro com a média da célula. Os pares
    cobrem as nx + 2 células devolvidas por reconstruct.

    Raises:
        InstabilityError: se algum valor predito não for finito
    """
    left, right = pairs
    if averages is None:
        averages = 0.5 * (left + right)

    edges = grid.extended_interfaces(GHOST_LAYERS)[1:-1]
    centers = grid.extended_centers(GHOST_LAYERS)[1:-1]
    b_left = flux_coefficient(params, edges[:-1])
    b_right = flux_coefficient(params, edges[1:])

    difference = b_right * burgers_flux(right) - b_left * burgers_flux(left)
    increment = -(dt / (2.0 * grid.dr)) * difference + (dt / 2.0) * source(
        params, centers, averages, config.source_form
    )
    left_half = left + increment
    right_half = right + increment

    _check_finite(left_half, offset=-1, stage="meio passo")
    _check_finite(right_half, offset=-1, stage="meio passo")
    return left_half, right_half


def step(
    state: State,
    grid: Grid,
    params: Params,
    config: SchemeConfig,
    dt: float | None = None,
    t_end: float | None = None,
) -> State:
    """
    Avança o estado de t^n para t^{n+1}.

    Raises:
        CFLViolationError: se o dt usado violar a condição CFL
        InstabilityError: se o novo estado tiver valores não finitos
    """
    if state.v.size != grid.nx:
        raise ValueError(f"Estado com {state.v.size} células, malha com {grid.nx}")
    if dt is None:
        dt = compute_dt(state, grid, params, config, t_end)

    ratio_cfl = cfl_ratio(dt, grid, params)
    if ratio_cfl > 1.0:
        raise CFLViolationError(
            f"Passo com dt={dt} viola a condição CFL: {ratio_cfl:.6g} > 1", key="dt"
        )

    extended = apply_bc(state, config)
    b_faces = flux_coefficient(params, grid.interfaces)

    if config.order == 1:
        g = riemann_flux(extended[1:-2], extended[2:-1])
        s = source(params, grid.centers, state.v, config.source_form)
    else:
        pairs = reconstruct(extended, grid, config)
        extended, pairs = balance_inflow(extended, pairs, grid, params)
        left_half, right_half = half_step(
            pairs, grid, params, config, dt, averages=extended[1:-1]
        )
        # Riemann entre a face direita da célula j-1 e a face esquerda da célula j
        g = riemann_flux(right_half[:-1], left_half[1:])
        midpoint = 0.5 * (left_half + right_half)[1:-1]
        s = source(params, grid.centers, midpoint, config.source_form)

    fluxes = b_faces * g
    # Expressão fixada: v - (dt/dr)·(F_{j+1/2} - F_{j-1/2}) + dt·S, sem reassociar
    ratio = dt / grid.dr
    v_new = state.v - ratio * (fluxes[1:] - fluxes[:-1]) + dt * s

    _check_finite(v_new, offset=0, stage="passo completo")
    return State(v=v_new, time=state.time + dt, iter=state.iter + 1, dt=dt)


def _check_finite(values: np.ndarray, offset: int, stage: str) -> None:
    """Aborta com o índice da célula se houver valores não finitos."""
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        cell = int(bad[0]) + offset
        raise InstabilityError(f"Valor não finito no {stage}", cell=cell)
