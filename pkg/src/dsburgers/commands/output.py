"""Consoles compartilhados pelos comandos."""

import typer
from rich.console import Console

from dsburgers.errors import DSBurgersError

# stdout recebe apenas dados (caminhos dos arquivos gravados)
console = Console(highlight=False, soft_wrap=True)
err_console = Console(stderr=True)


def report_written(path) -> None:
    console.print(str(path))


def warn(message: str) -> None:
    err_console.print(f"[yellow]Aviso:[/yellow] {message}")


def abort(error: DSBurgersError) -> typer.Exit:
    """Imprime o erro no stderr e devolve o Exit com o código do erro."""
    err_console.print(f"[red]Erro:[/red] {error}")
    return typer.Exit(int(error.exit_code))


def superluminal_message(lam: float, factor: float, c: float) -> str:
    return (
        f"Λ={lam:g}: fator característico máximo {factor:.6g} > c={c:g}, "
        "velocidades de propagação superluminais"
    )
