"""Escrita e leitura de snapshots, metadados e tabelas."""

from pathlib import Path

import numpy as np

from dsburgers.errors import ConfigError, OutputError
from dsburgers.godunov.models import Grid, Snapshot, State
from dsburgers.output.models import ConvergenceRow, RunMetadata, SummaryRow

SNAPSHOT_HEADER = "r,v"
SUMMARY_HEADER = "lambda,iter,front_r"
CONVERGENCE_HEADER = "nx,l1,order"


def snapshot_filename(iteration: int) -> str:
    return f"snap_{iteration}.csv"


def emit_snapshot_csv(snapshot: Snapshot | State, grid: Grid, directory: str | Path) -> Path:
    """
    Grava o snapshot em `snap_<iter>.csv` com cabeçalho `r,v`.

    Cada linha traz o centro da célula e o valor com 17 dígitos significativos,
    o suficiente para reler o estado bit a bit.

    Raises:
        OutputError: se o arquivo não puder ser escrito
    """
    if snapshot.v.size != grid.nx:
        raise ValueError(f"Snapshot com {snapshot.v.size} células, malha com {grid.nx}")
    path = Path(directory) / snapshot_filename(snapshot.iter)
    data = np.column_stack([grid.centers, snapshot.v])
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        np.savetxt(
            path,
            data,
            fmt="%.17g",
            delimiter=",",
            newline="\n",
            header=SNAPSHOT_HEADER,
            comments="",
        )
    except OSError as e:
        raise OutputError(f"Não foi possível escrever {path}: {e}") from e
    return path


def load_snapshot_csv(path: str | Path) -> tuple[np.ndarray, np.ndarray]:
    """
    Lê um CSV `r,v` gravado por emit_snapshot_csv.

    Returns:
        Tupla (r, v)

    Raises:
        OutputError: se o arquivo não puder ser lido
        ConfigError: se o conteúdo não for um snapshot válido
    """
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Não foi possível ler {path}: {e}") from e

    header, _, body = text.partition("\n")
    if header.strip() != SNAPSHOT_HEADER:
        raise ConfigError(f"Cabeçalho inválido em {path}: {header!r}", key="ic_file")
    try:
        data = np.loadtxt(body.splitlines(), delimiter=",", ndmin=2)
    except ValueError as e:
        raise ConfigError(f"Snapshot malformado em {path}: {e}", key="ic_file") from e

    if data.shape[0] == 0 or data.shape[1] != 2:
        raise ConfigError(f"Snapshot em {path} precisa ter duas colunas e ao menos uma linha")
    return data[:, 0].copy(), data[:, 1].copy()


def render_metadata(meta: RunMetadata) -> str:
    """Renderiza os metadados como JSON indentado."""
    return meta.model_dump_json(indent=2) + "\n"


def emit_metadata(meta: RunMetadata, directory: str | Path) -> Path:
    """
    Grava `metadata.json` no diretório da execução.

    Raises:
        OutputError: se o arquivo não puder ser escrito
    """
    path = Path(directory) / "metadata.json"
    _write_text(path, render_metadata(meta))
    return path


def load_metadata(path: str | Path) -> RunMetadata:
    """Carrega um metadata.json gravado por emit_metadata."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        raise OutputError(f"Não foi possível ler {path}: {e}") from e
    return RunMetadata.model_validate_json(text)


def emit_summary_csv(rows: list[SummaryRow], directory: str | Path) -> Path:
    """Grava `summary.csv` com as colunas lambda,iter,front_r."""
    lines = [SUMMARY_HEADER]
    for row in rows:
        lines.append(f"{row.lam:.17g},{row.iter},{_format_optional(row.front_r)}")
    path = Path(directory) / "summary.csv"
    _write_text(path, "\n".join(lines) + "\n")
    return path


def emit_convergence_csv(rows: list[ConvergenceRow], directory: str | Path) -> Path:
    """Grava `convergence.csv` com as colunas nx,l1,order."""
    lines = [CONVERGENCE_HEADER]
    for row in rows:
        lines.append(f"{row.nx},{row.l1:.17g},{_format_optional(row.order)}")
    path = Path(directory) / "convergence.csv"
    _write_text(path, "\n".join(lines) + "\n")
    return path


def _format_optional(value: float | None) -> str:
    # Campo vazio quando não há valor (frente não encontrada, primeira resolução)
    return "" if value is None else f"{value:.17g}"


def _write_text(path: Path, text: str) -> None:
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8", newline="\n")
    except OSError as e:
        raise OutputError(f"Não foi possível escrever {path}: {e}") from e
