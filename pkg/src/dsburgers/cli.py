"""CLI principal do dsburgers."""

import typer
from rich.console import Console

from dsburgers import __version__
from dsburgers.commands import convergence, run

app = typer.Typer(
    name="dsburgers",
    help="Solver de volumes finitos para Burgers relativística em de Sitter",
    add_completion=False,
)

console = Console()


def version_callback(value: bool) -> None:
    """Mostra a versão e sai."""
    if value:
        console.print(f"[bold blue]dsburgers[/bold blue] version {__version__}")
        raise typer.Exit()


@app.callback()
def main(
    version: bool = typer.Option(
        False,
        "--version",
        "-v",
        callback=version_callback,
        is_eager=True,
        help="Mostra a versão do dsburgers",
    ),
) -> None:
    """dsburgers - equação de Burgers relativística no espaço-tempo de de Sitter."""
    pass


# Registra os comandos
app.command(name="run")(run.run_command)
app.command(name="convergence")(convergence.convergence_command)


if __name__ == "__main__":
    app()
