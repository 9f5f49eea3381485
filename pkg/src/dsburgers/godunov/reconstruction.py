"""Células fantasmas e reconstrução linear por partes."""

import numpy as np

from dsburgers.geometry.models import Params
from dsburgers.godunov.models import (
    GHOST_LAYERS,
    BoundaryCondition,
    Grid,
    Limiter,
    SchemeConfig,
    State,
)
from dsburgers.model.equation import flux_coefficient


def apply_bc(state: State | np.ndarray, config: SchemeConfig) -> np.ndarray:
    """
    Estende o estado com GHOST_LAYERS células fantasmas por lado.

    Contorno transmissivo: cada fantasma copia o valor interior mais próximo
    (extrapolação de gradiente nulo).
    """
    v = state.v if isinstance(state, State) else np.asarray(state, dtype=float)
    if config.bc == BoundaryCondition.TRANSMISSIVE:
        return np.pad(v, GHOST_LAYERS, mode="edge")
    raise ValueError(f"Condição de contorno não suportada: {config.bc}")


def minmod(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Minmod: o argumento de menor módulo se os sinais concordam, senão zero."""
    return np.where(a * b > 0.0, np.sign(a) * np.minimum(np.abs(a), np.abs(b)), 0.0)


def reconstruct(
    extended: np.ndarray,
    grid: Grid,
    config: SchemeConfig,
) -> tuple[np.ndarray, np.ndarray]:
    """
    Reconstrói os pares (vL_i, vR_i) nas faces de cada célula.

    Recebe o estado já estendido por apply_bc e devolve pares para todas as
    células exceto a fantasma mais externa de cada lado (nx + 2 células).

    - ordem 1: vL = vR = v
    - ordem 2, MINMOD: inclinação limitada; vL fica entre v_{i-1} e v_i e
      vR entre v_i e v_{i+1}
    - ordem 2, NONE: inclinação centrada (v_{i+1} - v_{i-1})/2, sem limitação
    """
    if extended.size != grid.nx + 2 * GHOST_LAYERS:
        raise ValueError(
            f"Estado estendido com {extended.size} células, esperado {grid.nx + 2 * GHOST_LAYERS}"
        )

    center = extended[1:-1]
    if config.order == 1:
        return center.copy(), center.copy()

    backward = extended[1:-1] - extended[:-2]
    forward = extended[2:] - extended[1:-1]
    if config.limiter == Limiter.MINMOD:
        # Incremento s_i·dr da inclinação limitada
        delta = minmod(backward, forward)
    else:
        delta = 0.5 * (backward + forward)

    return center - 0.5 * delta, center + 0.5 * delta


def static_extrapolation(
    params: Params, r_from: float, v: float, r_to: np.ndarray
) -> np.ndarray:
    """
    Valor em r_to da solução estática que passa por (r_from, v).

    As soluções estáticas conservam N = (c² - v²)/(1 - Λr²). Onde b ≤ 0 ou o
    radicando c² - N·b(r_to) é negativo, devolve v (gradiente nulo).
    """
    r_to = np.asarray(r_to, dtype=float)
    b_from = float(flux_coefficient(params, r_from))
    if b_from <= 0.0:
        return np.full_like(r_to, v)

    c2 = params.c * params.c
    invariant = (c2 - v * v) / b_from
    b_to = flux_coefficient(params, r_to)
    radicand = c2 - invariant * b_to
    valid = (b_to > 0.0) & (radicand >= 0.0)
    return np.where(valid, np.sign(v) * np.sqrt(np.maximum(radicand, 0.0)), v)


def balance_inflow(
    extended: np.ndarray,
    pairs: tuple[np.ndarray, np.ndarray],
    grid: Grid,
    params: Params,
) -> tuple[np.ndarray, tuple[np.ndarray, np.ndarray]]:
    """
    Reconstrução em equilíbrio na fronteira r = r_min.

    A fantasma interna e os pares da fantasma e da célula 0 passam a seguir a
    solução estática que passa pelo centro da célula 0. Numa solução estática
    discreta o meio passo dessas duas células fica em O(dt·dr²) e o fluxo em
    r_min equilibra a fonte da célula 0.

    Com Λ = 0 a solução estática é constante e nada muda: o estado e os pares
    são devolvidos como vieram.
    """
    if params.lam == 0.0:
        return extended, pairs

    ghost = GHOST_LAYERS - 1
    edges = grid.extended_interfaces(GHOST_LAYERS)
    centers = grid.extended_centers(GHOST_LAYERS)
    r0 = float(centers[GHOST_LAYERS])
    v0 = float(extended[GHOST_LAYERS])

    balanced = extended.copy()
    balanced[ghost] = static_extrapolation(params, r0, v0, centers[ghost])
    # Faces r_min - dr, r_min e r_min + dr
    faces = static_extrapolation(params, r0, v0, edges[ghost : GHOST_LAYERS + 2])

    left, right = pairs[0].copy(), pairs[1].copy()
    # Os pares começam na fantasma interna: índice 0 é a fantasma, 1 é a célula 0
    left[0], right[0] = faces[0], faces[1]
    left[1], right[1] = faces[1], faces[2]
    return balanced, (left, right)
