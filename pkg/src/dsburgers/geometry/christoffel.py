"""Símbolos de Christoffel da métrica de de Sitter: forma fechada e numérica."""

import math

import numpy as np

from dsburgers.errors import AngularDegeneracyError, DomainError, StencilDegeneracyError
from dsburgers.geometry.metric import lapse_factor, metric_contravariant, metric_covariant
from dsburgers.geometry.models import ChristoffelTable, Coordinates, Params

DEFAULT_STEP = 1e-5


def christoffel_closed_form(params: Params, coords: Coordinates) -> ChristoffelTable:
    """
    Preenche a tabela Γ^μ_{αβ} a partir das expressões analíticas.

    Os termos não nulos são:
    - Γ^0_{01} = Λr/(Λr²-1)
    - Γ^1_{11} = Λr/(1-Λr²)
    - Γ^1_{00} = Λr(Λr²-1)
    - Γ^1_{22} = r(Λr²-1), Γ^1_{33} = r(Λr²-1)sin²θ
    - Γ^2_{12} = Γ^3_{13} = 1/r
    - Γ^2_{33} = -sinθ cosθ, Γ^3_{23} = cotθ

    Raises:
        AngularDegeneracyError: se r = 0 ou θ fora de (0, π)
        HorizonSingularityError: se Λr² = 1
    """
    if not 0.0 < coords.theta < math.pi:
        raise AngularDegeneracyError(f"θ precisa estar em (0, π), recebido {coords.theta}")
    # Valida as mesmas degenerescências da métrica inversa
    metric_contravariant(params, coords)

    lam = params.lam
    r = coords.r
    sin_theta = math.sin(coords.theta)
    cos_theta = math.cos(coords.theta)
    shifted = lam * r * r - 1.0

    table = ChristoffelTable()
    table.set_symmetric(0, 0, 1, lam * r / shifted)
    table.set_symmetric(1, 1, 1, lam * r / (1.0 - lam * r * r))
    table.set_symmetric(1, 0, 0, lam * r * shifted)
    table.set_symmetric(1, 2, 2, r * shifted)
    table.set_symmetric(1, 3, 3, r * shifted * sin_theta * sin_theta)
    table.set_symmetric(2, 1, 2, 1.0 / r)
    table.set_symmetric(3, 1, 3, 1.0 / r)
    table.set_symmetric(2, 3, 3, -sin_theta * cos_theta)
    table.set_symmetric(3, 2, 3, cos_theta / sin_theta)
    return table


def christoffel_numeric(
    params: Params,
    coords: Coordinates,
    h: float = DEFAULT_STEP,
) -> ChristoffelTable:
    """
    Avalia Γ^μ_{αβ} = ½ g^{μν}(-∂_ν g_{αβ} + ∂_β g_{αν} + ∂_α g_{βν}) numericamente.

    Cada derivada parcial é aproximada por diferença central de metric_covariant.
    Serve de oráculo independente para christoffel_closed_form.

    Raises:
        StencilDegeneracyError: se algum ponto do estêncil for degenerado
    """
    _check_stencil(params, coords, h)

    try:
        inverse = metric_contravariant(params, coords).as_matrix()
        # derivatives[nu, a, b] = ∂_nu g_{ab}
        derivatives = np.zeros((4, 4, 4))
        for nu in range(4):
            forward = metric_covariant(params, coords.shifted(nu, h)).as_matrix()
            backward = metric_covariant(params, coords.shifted(nu, -h)).as_matrix()
            derivatives[nu] = (forward - backward) / (2.0 * h)
    except DomainError as e:
        raise StencilDegeneracyError(f"Estêncil degenerado em {coords} com h={h}: {e}") from e

    bracket = (
        -derivatives
        + np.transpose(derivatives, (2, 1, 0))
        + np.transpose(derivatives, (2, 0, 1))
    )
    gamma = 0.5 * np.einsum("mn,nab->mab", inverse, bracket)
    # Simetria exata nos índices inferiores
    gamma = 0.5 * (gamma + np.swapaxes(gamma, 1, 2))
    return ChristoffelTable(gamma)


def _check_stencil(params: Params, coords: Coordinates, h: float) -> None:
    """Rejeita estênceis que cruzam o horizonte, r = 0 ou os polos."""
    if h <= 0:
        raise StencilDegeneracyError(f"Passo h precisa ser positivo, recebido {h}")

    factors = [lapse_factor(params, r) for r in (coords.r - h, coords.r, coords.r + h)]
    if any(f == 0.0 for f in factors) or len({math.copysign(1.0, f) for f in factors}) > 1:
        raise StencilDegeneracyError(
            f"Estêncil em r={coords.r}±{h} atravessa o horizonte (Λ={params.lam})"
        )
    if coords.r - h <= 0.0 < coords.r + h:
        raise StencilDegeneracyError(f"Estêncil em r={coords.r}±{h} atravessa r = 0")
    if not (h < coords.theta < math.pi - h):
        raise StencilDegeneracyError(f"Estêncil em θ={coords.theta}±{h} atravessa um polo")
