"""Normas de erro, ordem observada e rastreamento de frentes."""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from dsburgers.errors import FrontNotFoundError
from dsburgers.godunov.models import Grid, Snapshot, State


@dataclass(frozen=True)
class ErrorReport:
    """Erros L1 e L∞ de um estado contra uma solução de referência."""

    l1: float
    linf: float
    observed_order: float | None = None

    def __post_init__(self):
        if self.l1 < 0 or self.linf < 0:
            raise ValueError(f"Normas negativas: l1={self.l1}, linf={self.linf}")


def observed_order(e_coarse: float, e_fine: float, ratio: float = 2.0) -> float:
    """Ordem observada log(e_coarse/e_fine)/log(ratio) entre duas resoluções."""
    if e_coarse <= 0 or e_fine <= 0:
        raise ValueError(f"Erros precisam ser positivos: {e_coarse}, {e_fine}")
    return math.log(e_coarse / e_fine) / math.log(ratio)


def error_norms(
    numeric: State | Snapshot | np.ndarray,
    exact: Callable[[np.ndarray], np.ndarray],
    grid: Grid,
    window: tuple[float, float] | None = None,
    coarse: ErrorReport | None = None,
) -> ErrorReport:
    """
    Calcula l1 = dr·Σ|v_j - exact(r_j)| e linf = max_j|v_j - exact(r_j)|.

    Args:
        numeric: Estado numérico (ou array de médias)
        exact: Solução de referência avaliada nos centros
        grid: Malha do estado
        window: Intervalo (r_lo, r_hi) restringindo as células medidas
        coarse: Relatório da malha duas vezes mais grossa, para a ordem observada
    """
    v = numeric if isinstance(numeric, np.ndarray) else numeric.v
    r = grid.centers
    difference = np.abs(v - np.asarray(exact(r), dtype=float))
    if window is not None:
        r_lo, r_hi = window
        difference = difference[(r >= r_lo) & (r <= r_hi)]
        if difference.size == 0:
            raise ValueError(f"Janela {window} não contém nenhuma célula")

    l1 = float(grid.dr * np.sum(difference))
    linf = float(np.max(difference))
    order = observed_order(coarse.l1, l1) if coarse is not None else None
    return ErrorReport(l1=l1, linf=linf, observed_order=order)


def front_position(
    snapshot: State | Snapshot | np.ndarray,
    grid: Grid,
    level: float,
) -> float:
    """
    Posição da frente onde v cruza `level`, varrendo da direita para a esquerda.

    Retorna o cruzamento mais à direita, interpolado linearmente entre os
    centros das duas células vizinhas.

    Raises:
        FrontNotFoundError: se v não cruzar o nível
    """
    v = snapshot if isinstance(snapshot, np.ndarray) else snapshot.v
    offset = v - level
    signs = np.sign(offset)
    crossings = np.flatnonzero(signs[:-1] != signs[1:])
    if crossings.size == 0:
        raise FrontNotFoundError(f"Nenhum cruzamento do nível {level} no snapshot")

    j = int(crossings[-1])
    r = grid.centers
    if offset[j + 1] == 0.0:
        return float(r[j + 1])
    weight = offset[j] / (offset[j] - offset[j + 1])
    return float(r[j] + weight * (r[j + 1] - r[j]))
