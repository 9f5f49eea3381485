"""
Equação de Burgers relativística no fundo de de Sitter.

Forma conservativa:

    ∂t v + ∂r((1-Λr²) v²/2) = Λr(c² - 2v²)

Com Λ = 0 recupera-se a equação de Burgers clássica ∂t v + ∂r(v²/2) = 0.
Todas as funções aceitam escalares ou arrays numpy.
"""

import numpy as np

from dsburgers.geometry.models import Params
from dsburgers.model.models import SourceForm

ArrayLike = float | np.ndarray


def flux_coefficient(params: Params, r: ArrayLike) -> ArrayLike:
    """Retorna b(r) = 1 - Λr², o coeficiente de velocidade do fluxo."""
    return 1.0 - params.lam * r * r


def conservative_flux(params: Params, r: ArrayLike, v: ArrayLike) -> ArrayLike:
    """Retorna o fluxo (1-Λr²)·v²/2."""
    return flux_coefficient(params, r) * (0.5 * v * v)


def source(
    params: Params,
    r: ArrayLike,
    v: ArrayLike,
    form: SourceForm = SourceForm.CONSERVATIVE,
) -> ArrayLike:
    """
    Termo fonte do lado direito.

    - CONSERVATIVE: Λr(c² - 2v²)
    - NON_CONSERVATIVE: Λr(c² - v²)

    As duas formas diferem exatamente por -Λr·v², a correção (v²/2)·∂r b
    da divergência do fluxo.
    """
    c2 = params.c * params.c
    if form == SourceForm.CONSERVATIVE:
        return params.lam * r * (c2 - 2.0 * v * v)
    if form == SourceForm.NON_CONSERVATIVE:
        return params.lam * r * (c2 - v * v)
    raise ValueError(f"Forma de fonte desconhecida: {form}")


def characteristic_speed(params: Params, r: ArrayLike, v: ArrayLike) -> ArrayLike:
    """Velocidade característica b(r)·v da forma quase linear."""
    return flux_coefficient(params, r) * v
