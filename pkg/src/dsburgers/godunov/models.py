"""Modelos de dados do esquema de volumes finitos."""

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

import numpy as np

from dsburgers.model.models import SourceForm

# Camadas de células fantasmas por lado (estêncil de segunda ordem)
GHOST_LAYERS = 2


class Limiter(str, Enum):
    """Limitador de inclinação da reconstrução de segunda ordem."""

    MINMOD = "minmod"
    NONE = "none"  # inclinação centrada sem limitação


class BoundaryCondition(str, Enum):
    """Condição de contorno nas extremidades do domínio."""

    TRANSMISSIVE = "transmissive"


class DtMode(str, Enum):
    """Política de passo de tempo."""

    ADAPTIVE = "adaptive"
    FIXED = "fixed"


@dataclass(frozen=True)
class Grid:
    """
    Malha radial uniforme em [r_min, r_max].

    As interfaces são construídas por soma acumulada, de modo que
    r_{j+1/2} = r_{j-1/2} + dr vale exatamente em ponto flutuante.
    """

    nx: int
    r_min: float = 0.0
    r_max: float = 1.0

    def __post_init__(self):
        if self.nx < 4:
            raise ValueError(f"nx precisa ser >= 4 (estêncil de segunda ordem), recebido {self.nx}")
        if not self.r_max > self.r_min:
            raise ValueError(f"Domínio inválido: [{self.r_min}, {self.r_max}]")

    @property
    def dr(self) -> float:
        return (self.r_max - self.r_min) / self.nx

    @cached_property
    def interfaces(self) -> np.ndarray:
        """Posições r_{j-1/2}, j = 0..nx (nx + 1 pontos)."""
        steps = np.full(self.nx + 1, self.dr)
        steps[0] = self.r_min
        return np.cumsum(steps)

    @cached_property
    def centers(self) -> np.ndarray:
        """Centros r_j = r_{j-1/2} + dr/2, j = 0..nx-1."""
        return self.interfaces[:-1] + 0.5 * self.dr

    def extended_interfaces(self, layers: int = GHOST_LAYERS) -> np.ndarray:
        """Interfaces incluindo as das células fantasmas (nx + 1 + 2·layers pontos)."""
        offsets = self.dr * np.arange(1, layers + 1)
        left = self.interfaces[0] - offsets[::-1]
        right = self.interfaces[-1] + offsets
        return np.concatenate([left, self.interfaces, right])

    def extended_centers(self, layers: int = GHOST_LAYERS) -> np.ndarray:
        """Centros incluindo as células fantasmas (nx + 2·layers pontos)."""
        edges = self.extended_interfaces(layers)
        return edges[:-1] + 0.5 * self.dr


@dataclass
class State:
    """Médias de célula v_j em um instante discreto."""

    v: np.ndarray
    time: float = 0.0
    iter: int = 0
    # Passo que produziu este estado (0 no estado inicial)
    dt: float = 0.0

    def __post_init__(self):
        self.v = np.asarray(self.v, dtype=float)
        if self.v.ndim != 1:
            raise ValueError(f"Estado precisa ser unidimensional, forma {self.v.shape}")
        if self.time < 0 or self.iter < 0:
            raise ValueError(f"Tempo/iteração negativos: t={self.time}, n={self.iter}")

    def copy(self) -> "State":
        return State(v=self.v.copy(), time=self.time, iter=self.iter, dt=self.dt)

    def total_variation(self) -> float:
        return float(np.sum(np.abs(np.diff(self.v))))


@dataclass(frozen=True)
class SchemeConfig:
    """
    Configuração do esquema numérico.

    Em modo FIXED, fixed_dt precisa respeitar a condição CFL; isso é checado
    por `validate_fixed_dt` contra a malha e os parâmetros físicos.
    """

    order: int = 2
    cfl_number: float = 0.9
    source_form: SourceForm = SourceForm.CONSERVATIVE
    limiter: Limiter = Limiter.MINMOD
    bc: BoundaryCondition = BoundaryCondition.TRANSMISSIVE
    dt_mode: DtMode = DtMode.ADAPTIVE
    fixed_dt: float | None = None
    # Teto de dt quando nenhuma velocidade limita o passo e não há t_end
    max_dt: float = 1.0

    def __post_init__(self):
        if self.order not in (1, 2):
            raise ValueError(f"order precisa ser 1 ou 2, recebido {self.order}")
        if not 0.0 < self.cfl_number <= 1.0:
            raise ValueError(f"cfl_number precisa estar em (0, 1], recebido {self.cfl_number}")
        if self.dt_mode == DtMode.FIXED:
            if self.fixed_dt is None or not (math.isfinite(self.fixed_dt) and self.fixed_dt > 0):
                raise ValueError(f"Modo FIXED exige fixed_dt positivo, recebido {self.fixed_dt}")


@dataclass
class Snapshot:
    """Cópia do estado em uma iteração agendada."""

    iter: int
    time: float
    v: np.ndarray
    max_speed: float
    superluminal: bool = False
    dt: float = 0.0
