"""Marcha no tempo com captura de snapshots."""

import numpy as np

from dsburgers.errors import InstabilityError
from dsburgers.geometry.models import Params
from dsburgers.godunov.initial import InitialCondition
from dsburgers.godunov.models import Grid, SchemeConfig, Snapshot, State
from dsburgers.godunov.scheme import compute_dt, max_characteristic_factor, step, validate_fixed_dt


def initial_state(ic: InitialCondition | np.ndarray, grid: Grid) -> State:
    """Cria o estado em t = 0 a partir de uma condição inicial ou de um array."""
    values = ic.evaluate(grid) if isinstance(ic, InitialCondition) else np.asarray(ic, dtype=float)
    if values.size != grid.nx:
        raise ValueError(f"Condição inicial com {values.size} valores, malha com {grid.nx}")
    if not np.all(np.isfinite(values)):
        raise ValueError("Condição inicial com valores não finitos")
    return State(v=values.copy(), time=0.0, iter=0)


def run(
    ic: InitialCondition | np.ndarray,
    grid: Grid,
    params: Params,
    config: SchemeConfig,
    schedule: list[int],
) -> list[Snapshot]:
    """
    Avança o esquema até a última iteração agendada.

    Captura snapshots na iteração 0 e em cada iteração do schedule. Cada
    snapshot registra o fator característico máximo e a flag superluminal.

    Raises:
        ValueError: se o schedule não for estritamente crescente
        CFLViolationError: se o dt fixo violar a condição CFL
        InstabilityError: anotado com a iteração em que ocorreu
    """
    _validate_schedule(schedule)
    validate_fixed_dt(grid, params, config)

    max_speed = max_characteristic_factor(grid, params)
    superluminal = max_speed > params.c
    targets = set(schedule)
    last = max(schedule, default=0)

    state = initial_state(ic, grid)
    snapshots = [_capture(state, max_speed, superluminal, dt=0.0)]

    while state.iter < last:
        dt = compute_dt(state, grid, params, config)
        state = _guarded_step(state, grid, params, config, dt)
        if state.iter in targets:
            snapshots.append(_capture(state, max_speed, superluminal, dt))

    return snapshots


def advance(
    state: State,
    grid: Grid,
    params: Params,
    config: SchemeConfig,
    t_end: float,
    max_iterations: int = 1_000_000,
) -> State:
    """
    Avança até exatamente t_end (o último passo é encurtado).

    Raises:
        CFLViolationError: se o dt fixo violar a condição CFL
        InstabilityError: anotado com a iteração em que ocorreu
        RuntimeError: se max_iterations for atingido antes de t_end
    """
    validate_fixed_dt(grid, params, config)
    current = state
    while current.time < t_end:
        if current.iter - state.iter >= max_iterations:
            raise RuntimeError(f"Limite de {max_iterations} iterações atingido antes de t={t_end}")
        dt = compute_dt(current, grid, params, config, t_end=t_end)
        current = _guarded_step(current, grid, params, config, dt)
        if t_end - current.time <= 1e-14 * max(1.0, t_end):
            current.time = t_end
    return current


def _guarded_step(
    state: State, grid: Grid, params: Params, config: SchemeConfig, dt: float
) -> State:
    """Executa um passo anotando instabilidades com a iteração."""
    try:
        return step(state, grid, params, config, dt=dt)
    except InstabilityError as e:
        e.iteration = state.iter + 1
        raise


def _capture(state: State, max_speed: float, superluminal: bool, dt: float) -> Snapshot:
    return Snapshot(
        iter=state.iter,
        time=state.time,
        v=state.v.copy(),
        max_speed=max_speed,
        superluminal=superluminal,
        dt=dt,
    )


def _validate_schedule(schedule: list[int]) -> None:
    if any(n < 0 for n in schedule):
        raise ValueError(f"Iterações do schedule precisam ser >= 0: {schedule}")
    if any(b <= a for a, b in zip(schedule, schedule[1:])):
        raise ValueError(f"Schedule precisa ser estritamente crescente: {schedule}")
