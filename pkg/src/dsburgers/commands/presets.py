"""Experimentos prontos de choque e rarefação comparando valores de Λ."""

import time
from dataclasses import dataclass
from pathlib import Path

from dsburgers.commands.output import report_written, superluminal_message, warn
from dsburgers.config.loader import build_grid, build_params, build_scheme
from dsburgers.config.models import RunConfig
from dsburgers.errors import ConfigError, FrontNotFoundError, InstabilityError
from dsburgers.geometry.models import Params
from dsburgers.godunov.initial import RAREFACTION_PRESET, SHOCK_PRESET, RiemannInitialCondition
from dsburgers.godunov.models import Grid
from dsburgers.godunov.runner import run
from dsburgers.godunov.scheme import max_characteristic_factor, validate_fixed_dt
from dsburgers.output.models import RunMetadata, SummaryRow
from dsburgers.output.writer import emit_metadata, emit_snapshot_csv, emit_summary_csv
from dsburgers.reference.analysis import front_position

PRESET_NX = 4000
PRESET_CHECKPOINTS = [100, 400, 600, 800]
DEFAULT_LAMBDAS = [0.0, 1.0]
PRESET_SAFETY = 0.9


@dataclass(frozen=True)
class Preset:
    """Condição inicial e nível rastreado de um experimento."""

    name: str
    ic: RiemannInitialCondition
    front_level: float


PRESETS = {
    "fig2-shock": Preset("fig2-shock", SHOCK_PRESET, SHOCK_PRESET.midpoint),
    # Cabeça do leque: 95% do caminho entre vl e vr
    "fig1-rarefaction": Preset(
        "fig1-rarefaction",
        RAREFACTION_PRESET,
        RAREFACTION_PRESET.vl + 0.95 * (RAREFACTION_PRESET.vr - RAREFACTION_PRESET.vl),
    ),
}


def shared_dt(
    grid: Grid, lambda_values: list[float], c: float, safety: float = PRESET_SAFETY
) -> float:
    """dt comum a todos os Λ: safety·dr / max_Λ max_j |1 - Λr²_{j±1/2}|."""
    worst = max(max_characteristic_factor(grid, Params(lam=lam, c=c)) for lam in lambda_values)
    return safety * grid.dr / worst


def lambda_dirname(lam: float) -> str:
    return f"lambda_{lam:g}"


def run_preset(
    name: str,
    lambda_values: list[float] | None = None,
    config: RunConfig | None = None,
    out_dir: str | Path = Path("dsburgers-out"),
) -> list[SummaryRow]:
    """
    Executa o preset para cada Λ com malha, dt, condição inicial e schedule comuns.

    Cada Λ grava seus snapshots e metadados em `lambda_<Λ>/`; o resumo com a
    posição da frente por checkpoint vai para `summary.csv`.

    Raises:
        ConfigError: preset desconhecido ou dt fixo acima do limite CFL
        InstabilityError: se alguma execução abortou (após gravar o resumo)
    """
    if name not in PRESETS:
        raise ConfigError(f"Preset desconhecido: '{name}'", key="preset")
    preset = PRESETS[name]
    config = config or RunConfig()
    lambda_values = lambda_values or DEFAULT_LAMBDAS
    out_dir = Path(out_dir)

    grid = build_grid(config, default_nx=PRESET_NX)
    dt = config.dt if config.dt is not None else shared_dt(grid, lambda_values, config.c)
    scheme = build_scheme(config, order=2, fixed_dt=dt)
    schedule = config.snapshots or PRESET_CHECKPOINTS

    for lam in lambda_values:
        validate_fixed_dt(grid, build_params(config, lam=lam), scheme)

    rows: list[SummaryRow] = []
    failures: list[InstabilityError] = []
    for lam in lambda_values:
        params = build_params(config, lam=lam)
        run_dir = out_dir / lambda_dirname(lam)

        factor = max_characteristic_factor(grid, params)
        superluminal = factor > params.c
        if superluminal:
            warn(superluminal_message(lam, factor, params.c))

        metadata = RunMetadata(
            config=config.model_copy(update={"lam": lam}).echo() | {"preset": name},
            dt=dt,
            max_characteristic_factor=factor,
            superluminal=superluminal,
            order=scheme.order,
            source_form=scheme.source_form.value,
        )

        start = time.perf_counter()
        try:
            snapshots = run(preset.ic, grid, params, scheme, schedule)
        except InstabilityError as e:
            warn(f"Λ={lam:g}: {e}")
            failures.append(e)
            metadata = metadata.model_copy(
                update={
                    "status": "instability",
                    "error": str(e),
                    "wall_clock_seconds": time.perf_counter() - start,
                }
            )
            report_written(emit_metadata(metadata, run_dir))
            rows.extend(SummaryRow(lam=lam, iter=n) for n in schedule)
            continue

        metadata = metadata.model_copy(
            update={
                "snapshots": [s.iter for s in snapshots],
                "final_time": snapshots[-1].time,
                "wall_clock_seconds": time.perf_counter() - start,
            }
        )
        for snapshot in snapshots:
            report_written(emit_snapshot_csv(snapshot, grid, run_dir))
            if snapshot.iter in schedule:
                rows.append(
                    SummaryRow(lam=lam, iter=snapshot.iter, front_r=_front(snapshot, grid, preset))
                )
        report_written(emit_metadata(metadata, run_dir))

    report_written(emit_summary_csv(rows, out_dir))
    if failures:
        raise InstabilityError(
            f"{len(failures)} execução(ões) do preset {name} abortaram por instabilidade"
        )
    return rows


def _front(snapshot, grid: Grid, preset: Preset) -> float | None:
    try:
        return front_position(snapshot, grid, preset.front_level)
    except FrontNotFoundError:
        warn(f"Frente não encontrada na iteração {snapshot.iter}")
        return None
