"""Artefatos de saída: snapshots CSV, metadados JSON e tabelas de resumo."""

from dsburgers.output.models import ConvergenceRow, RunMetadata, SummaryRow
from dsburgers.output.writer import (
    emit_convergence_csv,
    emit_metadata,
    emit_snapshot_csv,
    emit_summary_csv,
    load_metadata,
    load_snapshot_csv,
    render_metadata,
    snapshot_filename,
)

__all__ = [
    "ConvergenceRow",
    "RunMetadata",
    "SummaryRow",
    "emit_convergence_csv",
    "emit_metadata",
    "emit_snapshot_csv",
    "emit_summary_csv",
    "load_metadata",
    "load_snapshot_csv",
    "render_metadata",
    "snapshot_filename",
]
