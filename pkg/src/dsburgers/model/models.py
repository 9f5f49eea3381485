"""Modelos de dados do modelo contínuo (fontes e soluções estáticas)."""

from dataclasses import dataclass
from enum import Enum

from dsburgers.errors import StaticDomainError
from dsburgers.geometry.models import Params


class SourceForm(str, Enum):
    """Forma do termo fonte da equação."""

    CONSERVATIVE = "conservative"  # Λr(c² - 2v²), par da forma conservativa
    NON_CONSERVATIVE = "paper"  # Λr(c² - v²), forma do esquema normalizado com c = 1


@dataclass(frozen=True)
class StaticSolutionSpec:
    """
    Parâmetros de uma solução estática v = sign·√(c² - N(1-Λr²)).

    Use `create` para validar o radicando sobre o domínio [r_min, r_max].
    """

    n_param: float
    sign: int = 1

    def __post_init__(self):
        if not self.n_param > 0:
            raise StaticDomainError(f"N precisa ser positivo, recebido {self.n_param}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign precisa ser +1 ou -1, recebido {self.sign}")

    @classmethod
    def create(
        cls,
        params: Params,
        n_param: float,
        sign: int = 1,
        r_min: float = 0.0,
        r_max: float = 1.0,
    ) -> "StaticSolutionSpec":
        """
        Cria a especificação validando c² - N(1-Λr²) >= 0 em todo o domínio.

        1-Λr² é monótono em r >= 0, então basta checar os extremos.

        Raises:
            StaticDomainError: se o radicando for negativo em algum extremo
        """
        spec = cls(n_param=n_param, sign=sign)
        c2 = params.c * params.c
        for r in (r_min, r_max):
            radicand = c2 - n_param * (1.0 - params.lam * r * r)
            if radicand < 0:
                raise StaticDomainError(
                    f"Solução estática inválida: c² - N(1-Λr²) = {radicand:.6g} < 0 em r={r} "
                    f"(N={n_param}, Λ={params.lam}, c={params.c})"
                )
        return spec
