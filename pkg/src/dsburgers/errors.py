"""Hierarquia de erros do dsburgers e códigos de saída do CLI."""

from enum import IntEnum


class ExitCode(IntEnum):
    """Códigos de saída documentados do CLI."""

    OK = 0
    CONFIG = 2
    DOMAIN = 3
    INSTABILITY = 4
    OUTPUT = 5
    UNKNOWN_KEY = 6
    INVARIANT = 7


class DSBurgersError(Exception):
    """Erro base do dsburgers."""

    exit_code: ExitCode = ExitCode.CONFIG


class ConfigError(DSBurgersError, ValueError):
    """Configuração ilegível: arquivo ou valor de flag malformado."""

    exit_code = ExitCode.CONFIG

    def __init__(self, message: str, key: str | None = None):
        super().__init__(message)
        self.key = key


class UnknownKeyError(ConfigError):
    """Chave desconhecida no arquivo de configuração."""

    exit_code = ExitCode.UNKNOWN_KEY


class InvariantViolationError(ConfigError):
    """Configuração bem formada que viola um invariante."""

    exit_code = ExitCode.INVARIANT


class CFLViolationError(InvariantViolationError):
    """Passo de tempo que viola a condição CFL."""


class DomainError(DSBurgersError, ValueError):
    """Entrada fora do domínio matemático da operação."""

    exit_code = ExitCode.DOMAIN


class HorizonSingularityError(DomainError):
    """Avaliação sobre (ou além) do horizonte, onde 1 - Λr² se anula."""


class AngularDegeneracyError(DomainError):
    """Coordenadas degeneradas: r = 0 ou sin θ = 0."""


class StencilDegeneracyError(DomainError):
    """Degenerescência dentro do estêncil de diferenças finitas."""


class SuperluminalError(DomainError):
    """Velocidade do fluido |v| >= c."""


class StaticDomainError(DomainError):
    """Radicando negativo na solução estática."""


class PreShockError(DomainError):
    """Solução por características pedida após a formação de choque."""


class FrontNotFoundError(DomainError):
    """Nenhum cruzamento do nível procurado no snapshot."""


class InstabilityError(DSBurgersError, ArithmeticError):
    """Valor não finito produzido pelo esquema."""

    exit_code = ExitCode.INSTABILITY

    def __init__(self, message: str, cell: int | None = None, iteration: int | None = None):
        super().__init__(message)
        self.cell = cell
        self.iteration = iteration

    def __str__(self) -> str:
        details = []
        if self.cell is not None:
            details.append(f"célula {self.cell}")
        if self.iteration is not None:
            details.append(f"iteração {self.iteration}")
        base = super().__str__()
        return f"{base} ({', '.join(details)})" if details else base


class OutputError(DSBurgersError, OSError):
    """Falha de escrita/leitura de arquivos de saída."""

    exit_code = ExitCode.OUTPUT
