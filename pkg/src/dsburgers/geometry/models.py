"""Modelos de dados da geometria de de Sitter."""

import math
from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True)
class Params:
    """
    Configuração física compartilhada por todos os módulos.

    lam é a constante cosmológica Λ (qualquer real; Λ < 0 é anti-de Sitter)
    e c a velocidade da luz (normalizada para 1 nos experimentos).
    """

    lam: float = 0.0
    c: float = 1.0

    def __post_init__(self):
        if not math.isfinite(self.lam):
            raise ValueError(f"Λ precisa ser finito, recebido {self.lam}")
        if not (math.isfinite(self.c) and self.c > 0):
            raise ValueError(f"c precisa ser positivo, recebido {self.c}")


@dataclass(frozen=True)
class Coordinates:
    """Ponto do espaço-tempo em coordenadas (t, r, θ, φ)."""

    t: float = 0.0
    r: float = 0.0
    theta: float = math.pi / 2
    phi: float = 0.0

    def __post_init__(self):
        if not self.r >= 0.0:
            raise ValueError(f"r precisa ser >= 0, recebido {self.r}")

    def shifted(self, index: int, h: float) -> "Coordinates":
        """Retorna uma cópia com a coordenada `index` deslocada de h."""
        values = [self.t, self.r, self.theta, self.phi]
        values[index] += h
        return Coordinates(*values)


@dataclass(frozen=True)
class MetricComponents:
    """Diagonal de uma métrica diagonal (covariante ou contravariante)."""

    g00: float
    g11: float
    g22: float
    g33: float

    @property
    def diagonal(self) -> np.ndarray:
        return np.array([self.g00, self.g11, self.g22, self.g33])

    def as_matrix(self) -> np.ndarray:
        """Matriz 4x4 completa; fora da diagonal é identicamente zero."""
        return np.diag(self.diagonal)


@dataclass
class ChristoffelTable:
    """
    Tabela 4x4x4 dos símbolos de Christoffel Γ^μ_{αβ}.

    Indexada como table[mu, alpha, beta].
    """

    gamma: np.ndarray = field(default_factory=lambda: np.zeros((4, 4, 4)))

    def __post_init__(self):
        self.gamma = np.asarray(self.gamma, dtype=float)
        if self.gamma.shape != (4, 4, 4):
            raise ValueError(
                f"Tabela de Christoffel precisa ter forma (4, 4, 4), não {self.gamma.shape}"
            )

    def __getitem__(self, index: tuple[int, int, int]) -> float:
        return float(self.gamma[index])

    def set_symmetric(self, mu: int, alpha: int, beta: int, value: float) -> None:
        """Define Γ^μ_{αβ} e Γ^μ_{βα} de uma vez."""
        self.gamma[mu, alpha, beta] = value
        self.gamma[mu, beta, alpha] = value

    def is_symmetric(self) -> bool:
        """Verifica a simetria nos índices inferiores (exata)."""
        return bool(np.array_equal(self.gamma, np.swapaxes(self.gamma, 1, 2)))

    def max_abs_difference(self, other: "ChristoffelTable") -> float:
        return float(np.max(np.abs(self.gamma - other.gamma)))


@dataclass(frozen=True)
class FourVelocity:
    """Componentes (u^0, u^1) da quadrivelocidade; as angulares são nulas."""

    u0: float
    u1: float


@dataclass(frozen=True)
class StressEnergy:
    """
    Bloco 1+1 do tensor energia-momento sem pressão.

    T^22 e T^33 são p/r² e p/(r² sin²θ), nulos para poeira, e não são guardados.
    """

    t00: float
    t01: float
    t11: float

    @property
    def t10(self) -> float:
        return self.t01

    def as_matrix(self) -> np.ndarray:
        return np.array([[self.t00, self.t01], [self.t10, self.t11]])
