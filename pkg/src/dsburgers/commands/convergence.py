"""Estudo de convergência contra os oráculos exatos."""

from pathlib import Path
from typing import Callable, Optional

import numpy as np
import typer
from rich.panel import Panel
from rich.table import Table

from dsburgers.commands.output import abort, err_console, report_written
from dsburgers.commands.run import collect_flags, resolve_output_dir
from dsburgers.config.loader import (
    build_grid,
    build_initial_condition,
    build_params,
    build_scheme,
    parse_config,
    parse_int_list,
    with_overrides,
)
from dsburgers.config.models import RunConfig
from dsburgers.errors import DSBurgersError, InvariantViolationError
from dsburgers.godunov.initial import SineProfile
from dsburgers.godunov.runner import advance, initial_state
from dsburgers.model.models import StaticSolutionSpec
from dsburgers.model.static import static_solution
from dsburgers.output.models import ConvergenceRow
from dsburgers.output.writer import emit_convergence_csv
from dsburgers.reference.analysis import ErrorReport, error_norms
from dsburgers.reference.exact import exact_smooth_classical

SMOOTH_T_END = 0.1
STATIC_T_END = 0.5
# Fora da camada de entrada que o contorno transmissivo cria à esquerda
SMOOTH_WINDOW = (0.25, 1.0)


def select_oracle(
    config: RunConfig,
) -> tuple[Callable[[np.ndarray], np.ndarray], float, tuple[float, float] | None]:
    """
    Escolhe o oráculo exato para a condição inicial configurada.

    Returns:
        Tupla (oráculo em t_end, t_end, janela de medição)

    Raises:
        InvariantViolationError: se não houver oráculo para a configuração
    """
    params = build_params(config)
    if config.ic == "smooth":
        if params.lam != 0.0:
            raise InvariantViolationError(
                "O oráculo por características só vale para Λ = 0 (ic=smooth)", key="lambda"
            )
        t_end = config.t_end or SMOOTH_T_END
        profile = SineProfile(mean=config.mean, amplitude=config.amplitude)
        return (lambda r: exact_smooth_classical(profile, t_end, r)), t_end, SMOOTH_WINDOW
    if config.ic == "static":
        spec = StaticSolutionSpec.create(params, config.static_n, config.static_sign)
        t_end = config.t_end or STATIC_T_END
        return (lambda r: static_solution(params, spec, r)), t_end, None
    raise InvariantViolationError(
        f"Sem oráculo exato para ic={config.ic}; use smooth (Λ = 0) ou static", key="ic"
    )


def convergence_study(
    config: RunConfig,
    nx_list: list[int] | None = None,
    out_dir: str | Path | None = None,
) -> list[ConvergenceRow]:
    """
    Executa cada resolução até t_end e mede o erro L1 contra o oráculo.

    A ordem observada de cada linha compara com a resolução anterior.
    Com out_dir, grava `convergence.csv`.

    Raises:
        InvariantViolationError: nx_list ausente ou sem refinamento 2x, dt fixo, ou sem oráculo
    """
    nx_list = nx_list or config.nx_list
    if not nx_list:
        raise InvariantViolationError("Informe as resoluções do estudo (nx_list)", key="nx_list")
    if nx_list is not config.nx_list:
        config = with_overrides(config, nx_list=nx_list)
    if config.dt is not None:
        raise InvariantViolationError(
            "O estudo de convergência usa dt adaptativo; remova 'dt'", key="dt"
        )

    oracle, t_end, window = select_oracle(config)
    params = build_params(config)
    scheme = build_scheme(config)

    rows: list[ConvergenceRow] = []
    coarse: ErrorReport | None = None
    for nx in nx_list:
        grid = build_grid(config, nx=nx)
        ic = build_initial_condition(config, params)
        final = advance(initial_state(ic, grid), grid, params, scheme, t_end)
        report = error_norms(final, oracle, grid, window=window, coarse=coarse)
        rows.append(ConvergenceRow(nx=nx, l1=report.l1, order=report.observed_order))
        coarse = report

    if out_dir is not None:
        report_written(emit_convergence_csv(rows, out_dir))
    return rows


def convergence_command(
    config_file: Optional[Path] = typer.Option(
        None, "--config", help="Arquivo de configuração JSON", exists=True, dir_okay=False
    ),
    lam: Optional[float] = typer.Option(None, "--lambda", help="Constante cosmológica Λ"),
    c: Optional[float] = typer.Option(None, "--c", help="Velocidade da luz (padrão 1)"),
    order: Optional[int] = typer.Option(None, "--order", help="Ordem do esquema (1 ou 2)"),
    cfl: Optional[float] = typer.Option(None, "--cfl", help="Número de Courant em (0, 1]"),
    source_form: Optional[str] = typer.Option(
        None, "--source-form", help="Forma da fonte: conservative ou paper"
    ),
    limiter: Optional[str] = typer.Option(None, "--limiter", help="Limitador: minmod ou none"),
    ic: Optional[str] = typer.Option(None, "--ic", help="Condição inicial: smooth ou static"),
    static_n: Optional[float] = typer.Option(None, "--static-n", help="Parâmetro N (static)"),
    static_sign: Optional[int] = typer.Option(None, "--static-sign", help="Ramo ±1 (static)"),
    t_end: Optional[float] = typer.Option(None, "--t-end", help="Tempo final"),
    nx_list: Optional[str] = typer.Option(
        None, "--nx-list", help="Resoluções separadas por vírgula, cada uma o dobro da anterior"
    ),
    out: Optional[Path] = typer.Option(
        None, "--out", "-o", envvar="DSBURGERS_OUT", help="Diretório de saída"
    ),
) -> None:
    """
    Mede erros L1 e ordens observadas sob refinamento da malha.

    Exemplos:

        dsburgers convergence --ic smooth --order 2 --nx-list 100,200,400

        dsburgers convergence --lambda 1 --ic static --static-n 0.5 --order 1 --nx-list 100,200,400
    """
    try:
        flags = collect_flags(
            lam=lam,
            c=c,
            order=order,
            cfl=cfl,
            source_form=source_form,
            limiter=limiter,
            ic=ic,
            static_n=static_n,
            static_sign=static_sign,
            t_end=t_end,
            nx_list=parse_int_list(nx_list, "nx_list"),
        )
        config = parse_config(flags, config_file)
        out_dir = resolve_output_dir(out, config)
        rows = convergence_study(config, out_dir=out_dir)
    except DSBurgersError as e:
        raise abort(e)

    table = Table(title="Convergência")
    table.add_column("nx", justify="right")
    table.add_column("L1", justify="right")
    table.add_column("ordem", justify="right")
    for row in rows:
        shown = "-" if row.order is None else f"{row.order:.3f}"
        table.add_row(str(row.nx), f"{row.l1:.6e}", shown)
    err_console.print(table)
    err_console.print(
        Panel(
            "[green]✓[/green] Estudo concluído\n\n"
            f"[bold]Saída:[/bold] {out_dir / 'convergence.csv'}",
            title="[bold blue]dsburgers convergence[/bold blue]",
            border_style="blue",
        )
    )
