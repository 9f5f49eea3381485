"""Comando run: uma execução do solver com snapshots e metadados."""

import time
from pathlib import Path
from typing import Optional

import typer
from rich.panel import Panel
from rich.progress import Progress, SpinnerColumn, TextColumn

from dsburgers.commands.output import (
    abort,
    err_console,
    report_written,
    superluminal_message,
    warn,
)
from dsburgers.commands.presets import run_preset
from dsburgers.config.loader import (
    build_grid,
    build_initial_condition,
    build_params,
    build_scheme,
    parse_config,
    parse_float_list,
    parse_int_list,
    resolve_schedule,
)
from dsburgers.config.models import RunConfig
from dsburgers.errors import DSBurgersError, InstabilityError
from dsburgers.godunov.models import Snapshot
from dsburgers.godunov.runner import advance, initial_state, run
from dsburgers.godunov.scheme import max_characteristic_factor
from dsburgers.output.models import RunMetadata
from dsburgers.output.writer import emit_metadata, emit_snapshot_csv

DEFAULT_OUT = Path("dsburgers-out")


def resolve_output_dir(out: Path | None, config: RunConfig) -> Path:
    """--out (ou DSBURGERS_OUT) > chave 'out' do arquivo > diretório padrão."""
    return out or config.out or DEFAULT_OUT


def execute_run(config: RunConfig, out_dir: Path) -> RunMetadata:
    """
    Executa uma configuração e grava snapshots e metadata.json em out_dir.

    Com t_end, avança até o tempo final e grava os estados inicial e final;
    senão grava as iterações do schedule.

    Raises:
        InstabilityError: após gravar os metadados com status 'instability'
    """
    params = build_params(config)
    grid = build_grid(config)
    scheme = build_scheme(config)
    ic = build_initial_condition(config, params)

    factor = max_characteristic_factor(grid, params)
    superluminal = factor > params.c
    if superluminal:
        warn(superluminal_message(params.lam, factor, params.c))

    metadata = RunMetadata(
        config=config.echo(),
        dt=config.dt,
        max_characteristic_factor=factor,
        superluminal=superluminal,
        order=scheme.order,
        source_form=scheme.source_form.value,
    )

    start = time.perf_counter()
    try:
        if config.t_end is not None:
            state = initial_state(ic, grid)
            first = Snapshot(
                iter=0, time=0.0, v=state.v.copy(), max_speed=factor, superluminal=superluminal
            )
            final = advance(state, grid, params, scheme, config.t_end)
            snapshots = [
                first,
                Snapshot(
                    iter=final.iter,
                    time=final.time,
                    v=final.v,
                    max_speed=factor,
                    superluminal=superluminal,
                    dt=final.dt,
                ),
            ]
        else:
            snapshots = run(ic, grid, params, scheme, resolve_schedule(config))
    except InstabilityError as e:
        metadata = metadata.model_copy(
            update={
                "status": "instability",
                "error": str(e),
                "wall_clock_seconds": time.perf_counter() - start,
            }
        )
        emit_metadata(metadata, out_dir)
        raise

    last = snapshots[-1]
    metadata = metadata.model_copy(
        update={
            "dt": last.dt if last.dt else metadata.dt,
            "snapshots": [s.iter for s in snapshots],
            "final_time": last.time,
            "wall_clock_seconds": time.perf_counter() - start,
        }
    )
    for snapshot in snapshots:
        report_written(emit_snapshot_csv(snapshot, grid, out_dir))
    report_written(emit_metadata(metadata, out_dir))
    return metadata


def collect_flags(**flags) -> dict:
    """Renomeia as flags para as chaves do RunConfig; None não sobrescreve."""
    if "lam" in flags:
        flags["lambda"] = flags.pop("lam")
    return flags


def run_command(
    config_file: Optional[Path] = typer.Option(
        None, "--config", help="Arquivo de configuração JSON", exists=True, dir_okay=False
    ),
    lam: Optional[float] = typer.Option(None, "--lambda", help="Constante cosmológica Λ"),
    c: Optional[float] = typer.Option(None, "--c", help="Velocidade da luz (padrão 1)"),
    nx: Optional[int] = typer.Option(None, "--nx", help="Número de células"),
    order: Optional[int] = typer.Option(None, "--order", help="Ordem do esquema (1 ou 2)"),
    cfl: Optional[float] = typer.Option(None, "--cfl", help="Número de Courant em (0, 1]"),
    source_form: Optional[str] = typer.Option(
        None, "--source-form", help="Forma da fonte: conservative ou paper"
    ),
    limiter: Optional[str] = typer.Option(None, "--limiter", help="Limitador: minmod ou none"),
    ic: Optional[str] = typer.Option(
        None,
        "--ic",
        help="Condição inicial: shock, rarefaction, static, riemann, file, smooth, constant",
    ),
    vl: Optional[float] = typer.Option(None, "--vl", help="Estado à esquerda (riemann)"),
    vr: Optional[float] = typer.Option(None, "--vr", help="Estado à direita (riemann)"),
    r0: Optional[float] = typer.Option(None, "--r0", help="Posição do salto (riemann)"),
    static_n: Optional[float] = typer.Option(None, "--static-n", help="Parâmetro N (static)"),
    static_sign: Optional[int] = typer.Option(None, "--static-sign", help="Ramo ±1 (static)"),
    ic_file: Optional[Path] = typer.Option(None, "--ic-file", help="CSV r,v (file)"),
    value: Optional[float] = typer.Option(None, "--value", help="Valor constante (constant)"),
    iters: Optional[int] = typer.Option(None, "--iters", help="Número de iterações"),
    t_end: Optional[float] = typer.Option(None, "--t-end", help="Tempo final"),
    snapshots: Optional[str] = typer.Option(
        None, "--snapshots", help="Iterações gravadas, separadas por vírgula"
    ),
    dt: Optional[float] = typer.Option(None, "--dt", help="Passo de tempo fixo"),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", envvar="DSBURGERS_OUT", help="Diretório de saída"
    ),
    preset: Optional[str] = typer.Option(
        None, "--preset", help="Experimento pronto: fig1-rarefaction ou fig2-shock"
    ),
    lambdas: Optional[str] = typer.Option(
        None, "--lambdas", help="Valores de Λ do preset, separados por vírgula (padrão 0,1)"
    ),
) -> None:
    """
    Executa o solver de Godunov e grava snapshots CSV e metadata.json.

    Os caminhos dos arquivos gravados vão para o stdout; avisos e erros vão
    para o stderr.

    Exemplos:

        dsburgers run --lambda 1 --ic shock --iters 400 --snapshots 100,400

        dsburgers run --preset fig2-shock --lambdas 0,1 --out figs
    """
    try:
        flags = collect_flags(
            lam=lam,
            c=c,
            nx=nx,
            order=order,
            cfl=cfl,
            source_form=source_form,
            limiter=limiter,
            ic=ic,
            vl=vl,
            vr=vr,
            r0=r0,
            static_n=static_n,
            static_sign=static_sign,
            ic_file=ic_file,
            value=value,
            iters=iters,
            t_end=t_end,
            snapshots=parse_int_list(snapshots, "snapshots"),
            dt=dt,
            preset=preset,
            lambdas=parse_float_list(lambdas, "lambdas"),
        )
        config = parse_config(flags, config_file)
        out_dir = resolve_output_dir(out, config)

        with Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            console=err_console,
            transient=True,
        ) as progress:
            if config.preset:
                progress.add_task(f"Executando preset {config.preset}...", total=None)
                rows = run_preset(config.preset, config.lambdas, config, out_dir)
                summary = f"[bold]Checkpoints:[/bold] {len(rows)}"
            else:
                progress.add_task("Executando solver...", total=None)
                metadata = execute_run(config, out_dir)
                summary = (
                    f"[bold]Snapshots:[/bold] {metadata.snapshots}\n"
                    f"[bold]Tempo final:[/bold] {metadata.final_time:.6g}\n"
                    f"[bold]Duração:[/bold] {metadata.wall_clock_seconds:.3f} s"
                )
    except DSBurgersError as e:
        raise abort(e)

    err_console.print(
        Panel(
            f"[green]✓[/green] Execução concluída\n\n[bold]Saída:[/bold] {out_dir}\n{summary}",
            title="[bold blue]dsburgers run[/bold blue]",
            border_style="blue",
        )
    )
