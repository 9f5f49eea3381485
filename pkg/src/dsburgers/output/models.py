"""Modelos de dados dos artefatos de saída."""

from typing import Any

from pydantic import BaseModel, Field


class RunMetadata(BaseModel):
    """Metadados de uma execução, gravados em metadata.json."""

    config: dict[str, Any] = Field(description="Eco da configuração resolvida")
    dt: float | None = Field(default=None, description="Passo de tempo usado (último passo)")
    max_characteristic_factor: float = Field(
        description="max |1 - Λr²| sobre as interfaces da malha"
    )
    superluminal: bool = Field(description="Se o fator característico máximo excede c")
    wall_clock_seconds: float = Field(default=0.0, description="Duração da execução")
    order: int = Field(description="Ordem do esquema (1 ou 2)")
    source_form: str = Field(description="Forma do termo fonte")
    snapshots: list[int] = Field(default_factory=list, description="Iterações gravadas")
    final_time: float | None = Field(default=None, description="Tempo físico ao final")
    status: str = Field(default="ok", description="'ok' ou 'instability'")
    error: str | None = Field(default=None, description="Mensagem do erro que abortou a execução")


class SummaryRow(BaseModel):
    """Linha do resumo de um preset: posição da frente por Λ e iteração."""

    lam: float
    iter: int
    front_r: float | None = None


class ConvergenceRow(BaseModel):
    """Linha da tabela de convergência."""

    nx: int
    l1: float
    order: float | None = None
