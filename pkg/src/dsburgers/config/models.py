"""Modelo da configuração de uma execução."""

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from dsburgers.godunov.models import Limiter
from dsburgers.model.models import SourceForm

InitialKind = Literal["shock", "rarefaction", "static", "riemann", "file", "smooth", "constant"]
PresetName = Literal["fig1-rarefaction", "fig2-shock"]


class RunConfig(BaseModel):
    """
    Configuração resolvida de uma execução (flags > arquivo > defaults).

    A validação estrutural acontece aqui; a validação física (radicando da
    solução estática, CFL do dt fixo) fica em `config.loader.validate_physics`.
    """

    model_config = ConfigDict(extra="forbid", populate_by_name=True, frozen=True)

    lam: float = Field(default=0.0, alias="lambda", description="Constante cosmológica Λ")
    c: float = Field(default=1.0, gt=0, description="Velocidade da luz")
    nx: int | None = Field(default=None, ge=4, description="Número de células")
    order: Literal[1, 2] = Field(default=2, description="Ordem do esquema")
    cfl: float = Field(default=0.9, gt=0, le=1, description="Número de Courant")
    source_form: SourceForm = Field(default=SourceForm.CONSERVATIVE)
    limiter: Limiter = Field(default=Limiter.MINMOD)

    ic: InitialKind = Field(default="shock", description="Condição inicial")
    vl: float | None = None
    vr: float | None = None
    r0: float | None = Field(default=None, ge=0, le=1)
    static_n: float | None = Field(
        default=None, gt=0, description="Parâmetro N da solução estática"
    )
    static_sign: Literal[1, -1] = 1
    ic_file: Path | None = None
    value: float | None = None
    mean: float = 0.5
    amplitude: float = 0.25

    iters: int | None = Field(default=None, ge=0, description="Iterações a executar")
    t_end: float | None = Field(default=None, gt=0, description="Tempo final")
    snapshots: list[int] | None = Field(default=None, description="Iterações gravadas")
    dt: float | None = Field(default=None, gt=0, description="dt fixo")

    out: Path | None = Field(default=None, description="Diretório de saída")
    preset: PresetName | None = None
    lambdas: list[float] | None = None
    nx_list: list[int] | None = None
    seed: int = 0

    @field_validator("snapshots")
    @classmethod
    def _increasing_snapshots(cls, value: list[int] | None) -> list[int] | None:
        if value is None:
            return value
        if any(n < 0 for n in value):
            raise ValueError("iterações precisam ser >= 0")
        if any(b <= a for a, b in zip(value, value[1:])):
            raise ValueError("iterações precisam ser estritamente crescentes")
        return value

    @field_validator("nx_list")
    @classmethod
    def _doubling_nx_list(cls, value: list[int] | None) -> list[int] | None:
        if value is None:
            return value
        if len(value) < 2:
            raise ValueError("são necessárias ao menos duas resoluções")
        for coarse, fine in zip(value, value[1:]):
            if fine != 2 * coarse:
                raise ValueError(f"{fine} não é um refinamento por fator 2 de {coarse}")
        if value[0] < 4:
            raise ValueError("resoluções precisam ser >= 4")
        return value

    @model_validator(mode="after")
    def _consistent(self) -> "RunConfig":
        if self.iters is not None and self.t_end is not None:
            raise ValueError("iters e t_end são mutuamente exclusivos")
        if self.snapshots is not None and self.t_end is not None:
            raise ValueError(
                "snapshots não combina com t_end, que grava só os estados inicial e final"
            )
        if self.snapshots and self.iters is not None and self.snapshots[-1] > self.iters:
            raise ValueError("snapshots além de iters")
        required = {
            "riemann": ("vl", "vr", "r0"),
            "static": ("static_n",),
            "file": ("ic_file",),
            "constant": ("value",),
        }
        for key in required.get(self.ic, ()):
            if getattr(self, key) is None:
                raise ValueError(f"ic={self.ic} exige '{key}'")
        return self

    def echo(self) -> dict:
        """Configuração como dicionário JSON, com as chaves do arquivo."""
        return self.model_dump(mode="json", by_alias=True)
