"""Condições iniciais e perfis suaves."""

import math
from abc import ABC, abstractmethod
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from dsburgers.geometry.models import Params
from dsburgers.godunov.models import Grid
from dsburgers.model.models import StaticSolutionSpec
from dsburgers.model.static import static_solution


class InitialCondition(ABC):
    """Interface abstrata para condições iniciais."""

    @abstractmethod
    def evaluate(self, grid: Grid) -> np.ndarray:
        """
        Calcula os valores iniciais nas células da malha.

        Args:
            grid: Malha de destino

        Returns:
            Array com nx valores
        """
        pass

    @abstractmethod
    def describe(self) -> dict:
        """Descrição serializável para os metadados da execução."""
        pass


class SmoothProfile(ABC):
    """Perfil suave v0(r) usado como dado inicial e pelo oráculo de características."""

    @abstractmethod
    def __call__(self, r: float | np.ndarray) -> float | np.ndarray:
        pass

    @abstractmethod
    def bounds(self) -> tuple[float, float]:
        """Retorna (min v0, max v0) sobre a reta."""
        pass

    @abstractmethod
    def breaking_time(self) -> float:
        """Primeiro instante de choque, 1/max(-v0'); infinito se não houver."""
        pass


@dataclass(frozen=True)
class SineProfile(SmoothProfile):
    """v0(r) = mean + amplitude·sin(2π·wavenumber·r)."""

    mean: float = 0.5
    amplitude: float = 0.25
    wavenumber: float = 1.0

    def __call__(self, r):
        return self.mean + self.amplitude * np.sin(2.0 * math.pi * self.wavenumber * r)

    def bounds(self) -> tuple[float, float]:
        spread = abs(self.amplitude)
        return self.mean - spread, self.mean + spread

    def breaking_time(self) -> float:
        steepness = abs(self.amplitude) * 2.0 * math.pi * self.wavenumber
        return math.inf if steepness == 0 else 1.0 / steepness


@dataclass(frozen=True)
class ConstantProfile(SmoothProfile):
    """v0(r) = value."""

    value: float

    def __call__(self, r):
        return self.value + 0.0 * np.asarray(r, dtype=float)

    def bounds(self) -> tuple[float, float]:
        return self.value, self.value

    def breaking_time(self) -> float:
        return math.inf


@dataclass(frozen=True)
class RiemannInitialCondition(InitialCondition):
    """Dado de Riemann: vl para r < r0 e vr para r >= r0."""

    vl: float
    vr: float
    r0: float
    name: str = "riemann"

    def __post_init__(self):
        if not 0.0 <= self.r0 <= 1.0:
            raise ValueError(f"r0 precisa estar em [0, 1], recebido {self.r0}")

    def evaluate(self, grid: Grid) -> np.ndarray:
        return np.where(grid.centers < self.r0, self.vl, self.vr)

    def describe(self) -> dict:
        return {"kind": self.name, "vl": self.vl, "vr": self.vr, "r0": self.r0}

    @property
    def midpoint(self) -> float:
        return 0.5 * (self.vl + self.vr)


# Dados de Riemann dos experimentos prontos de choque e rarefação
SHOCK_PRESET = RiemannInitialCondition(vl=0.8, vr=0.2, r0=0.3, name="shock")
RAREFACTION_PRESET = RiemannInitialCondition(vl=0.2, vr=0.8, r0=0.3, name="rarefaction")


@dataclass(frozen=True)
class StaticInitialCondition(InitialCondition):
    """Solução estática amostrada nos centros das células."""

    params: Params
    spec: StaticSolutionSpec

    def evaluate(self, grid: Grid) -> np.ndarray:
        return np.asarray(static_solution(self.params, self.spec, grid.centers), dtype=float)

    def describe(self) -> dict:
        return {"kind": "static", "n": self.spec.n_param, "sign": self.spec.sign}


@dataclass(frozen=True)
class ProfileInitialCondition(InitialCondition):
    """Perfil suave amostrado nos centros das células."""

    profile: SmoothProfile

    def evaluate(self, grid: Grid) -> np.ndarray:
        return np.asarray(self.profile(grid.centers), dtype=float)

    def describe(self) -> dict:
        if isinstance(self.profile, ConstantProfile):
            return {"kind": "constant", "value": self.profile.value}
        if isinstance(self.profile, SineProfile):
            return {
                "kind": "smooth",
                "mean": self.profile.mean,
                "amplitude": self.profile.amplitude,
                "wavenumber": self.profile.wavenumber,
            }
        return {"kind": type(self.profile).__name__}


@dataclass(frozen=True)
class FileInitialCondition(InitialCondition):
    """Estado lido de um CSV `r,v`; interpolado se a malha do arquivo for outra."""

    path: Path

    def evaluate(self, grid: Grid) -> np.ndarray:
        from dsburgers.output.writer import load_snapshot_csv

        r, v = load_snapshot_csv(self.path)
        if r.size == grid.nx and np.array_equal(r, grid.centers):
            return v
        return np.interp(grid.centers, r, v)

    def describe(self) -> dict:
        return {"kind": "file", "path": str(self.path)}
