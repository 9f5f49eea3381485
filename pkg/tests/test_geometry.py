"""Testes para o módulo geometry."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dsburgers.errors import (
    AngularDegeneracyError,
    HorizonSingularityError,
    StencilDegeneracyError,
    SuperluminalError,
)
from dsburgers.geometry import (
    ChristoffelTable,
    Coordinates,
    Params,
    christoffel_closed_form,
    christoffel_numeric,
    fluid_four_velocity,
    metric_contravariant,
    metric_covariant,
    stress_energy_pressureless,
)

# Entradas fora desta lista são identicamente nulas para a métrica de de Sitter
NONZERO_ENTRIES = {
    (0, 0, 1), (0, 1, 0),
    (1, 1, 1), (1, 0, 0), (1, 2, 2), (1, 3, 3),
    (2, 1, 2), (2, 2, 1), (2, 3, 3),
    (3, 1, 3), (3, 3, 1), (3, 2, 3), (3, 3, 2),
}


def test_params_reject_non_positive_c():
    """Testa que c <= 0 é rejeitado."""
    with pytest.raises(ValueError):
        Params(lam=1.0, c=0.0)
    with pytest.raises(ValueError):
        Params(lam=1.0, c=-1.0)


def test_metric_covariant_minkowski_limit():
    """Testa a métrica covariante com Λ = 0."""
    g = metric_covariant(Params(lam=0.0), Coordinates(r=3.0))

    assert g.g00 == -1.0
    assert g.g11 == 1.0
    assert g.g22 == pytest.approx(9.0)
    assert g.g33 == pytest.approx(9.0)


def test_metric_covariant_de_sitter():
    """Testa a métrica covariante com Λ = 1, r = 0.5."""
    g = metric_covariant(Params(lam=1.0), Coordinates(r=0.5))

    assert g.g00 == pytest.approx(-0.75)
    assert g.g11 == pytest.approx(4.0 / 3.0)
    assert g.g22 == pytest.approx(0.25)
    assert g.g33 == pytest.approx(0.25)

    matrix = g.as_matrix()
    assert np.count_nonzero(matrix - np.diag(np.diag(matrix))) == 0


def test_metric_covariant_horizon():
    """Testa o erro de singularidade no horizonte."""
    with pytest.raises(HorizonSingularityError):
        metric_covariant(Params(lam=1.0), Coordinates(r=1.0))


def test_metric_contravariant_values():
    """Testa a métrica contravariante nos limites plano e de Sitter."""
    flat = metric_contravariant(Params(lam=0.0), Coordinates(r=2.0))
    assert flat.g00 == -1.0
    assert flat.g11 == 1.0
    assert flat.g22 == pytest.approx(0.25)
    assert flat.g33 == pytest.approx(0.25)

    ds = metric_contravariant(Params(lam=1.0), Coordinates(r=0.5))
    assert ds.g00 == pytest.approx(-4.0 / 3.0)
    assert ds.g11 == pytest.approx(0.75)
    assert ds.g22 == pytest.approx(4.0)
    assert ds.g33 == pytest.approx(4.0)


def test_metric_contravariant_degeneracies():
    """Testa as degenerescências da métrica inversa."""
    with pytest.raises(AngularDegeneracyError):
        metric_contravariant(Params(lam=1.0), Coordinates(r=0.0))
    with pytest.raises(AngularDegeneracyError):
        metric_contravariant(Params(lam=1.0), Coordinates(r=0.5, theta=0.0))
    with pytest.raises(AngularDegeneracyError):
        metric_contravariant(Params(lam=1.0), Coordinates(r=0.5, theta=math.pi))
    with pytest.raises(HorizonSingularityError):
        metric_contravariant(Params(lam=4.0), Coordinates(r=0.5))


def test_coordinates_reject_negative_radius():
    """Testa a rejeição de r < 0."""
    with pytest.raises(ValueError):
        Coordinates(r=-0.1)
    with pytest.raises(ValueError):
        Coordinates(r=float("nan"))

    assert Coordinates(r=0.0).r == 0.0


@settings(max_examples=1000, deadline=None)
@given(
    lam=st.floats(min_value=-2.0, max_value=2.0),
    r=st.floats(min_value=0.05, max_value=0.95),
    theta=st.floats(min_value=0.1, max_value=math.pi - 0.1),
)
def test_metric_inverse_identity(lam, r, theta):
    """Testa g^{ik} g_{kj} = δ^i_j nas entradas válidas."""
    params = Params(lam=lam)
    coords = Coordinates(r=r, theta=theta)
    if abs(1.0 - lam * r * r) < 1e-3:
        return

    covariant = metric_covariant(params, coords).diagonal
    product = covariant * metric_contravariant(params, coords).diagonal
    np.testing.assert_allclose(product, np.ones(4), rtol=0, atol=1e-12)


def test_christoffel_minkowski():
    """Testa os símbolos de Christoffel em coordenadas esféricas planas."""
    table = christoffel_closed_form(Params(lam=0.0), Coordinates(r=2.0))

    assert table[2, 1, 2] == pytest.approx(0.5)
    assert table[2, 2, 1] == pytest.approx(0.5)
    assert table[3, 1, 3] == pytest.approx(0.5)
    assert table[3, 3, 1] == pytest.approx(0.5)
    assert table[1, 2, 2] == pytest.approx(-2.0)
    assert table[1, 3, 3] == pytest.approx(-2.0)
    assert table[2, 3, 3] == pytest.approx(0.0, abs=1e-15)
    assert table[3, 2, 3] == pytest.approx(0.0, abs=1e-15)
    # Termos com Λ se anulam
    assert table[0, 0, 1] == 0.0
    assert table[1, 1, 1] == 0.0
    assert table[1, 0, 0] == 0.0


def test_christoffel_de_sitter_values():
    """Testa valores com Λ = 1, r = 0.5, θ = π/3."""
    table = christoffel_closed_form(Params(lam=1.0), Coordinates(r=0.5, theta=math.pi / 3))

    assert table[1, 1, 1] == pytest.approx(2.0 / 3.0)
    assert table[0, 0, 1] == pytest.approx(-2.0 / 3.0)
    assert table[0, 1, 0] == pytest.approx(-2.0 / 3.0)
    assert table[3, 2, 3] == pytest.approx(1.0 / math.sqrt(3.0))


def test_christoffel_closed_form_structure():
    """Testa simetria e entradas nulas da forma fechada."""
    table = christoffel_closed_form(Params(lam=0.5), Coordinates(r=0.3, theta=math.pi / 6))

    assert table.is_symmetric()
    for index in np.ndindex(4, 4, 4):
        if index not in NONZERO_ENTRIES:
            assert table[index] == 0.0


def test_christoffel_closed_form_degeneracies():
    """Testa as degenerescências da forma fechada."""
    with pytest.raises(AngularDegeneracyError):
        christoffel_closed_form(Params(lam=1.0), Coordinates(r=0.0))
    with pytest.raises(AngularDegeneracyError):
        christoffel_closed_form(Params(lam=1.0), Coordinates(r=0.5, theta=0.0))
    with pytest.raises(HorizonSingularityError):
        christoffel_closed_form(Params(lam=1.0), Coordinates(r=1.0))


def test_christoffel_numeric_flat():
    """Testa Γ^2_{12} ≈ 1/r pela diferenciação numérica."""
    table = christoffel_numeric(Params(lam=0.0), Coordinates(r=3.0), h=1e-5)

    assert table[2, 1, 2] == pytest.approx(1.0 / 3.0, abs=1e-6)
    assert table[0, 0, 0] == 0.0


def test_christoffel_numeric_static_metric():
    """Testa que derivadas em t são nulas (métrica estática)."""
    table = christoffel_numeric(Params(lam=1.0), Coordinates(t=2.0, r=0.5, theta=math.pi / 3))

    assert table[0, 0, 0] == 0.0
    assert table[0, 1, 1] == 0.0
    assert table.is_symmetric()


def test_christoffel_agreement_sample_grid():
    """Testa a concordância entre forma fechada e diferenças centrais."""
    for lam in (0.0, 0.5, 1.0, -0.5):
        for r in (0.1, 0.3, 0.5, 0.9):
            for theta in (math.pi / 6, math.pi / 3, math.pi / 2):
                params = Params(lam=lam)
                coords = Coordinates(r=r, theta=theta)
                closed = christoffel_closed_form(params, coords)
                numeric = christoffel_numeric(params, coords, h=1e-5)

                assert closed.max_abs_difference(numeric) <= 1e-6


def test_christoffel_numeric_stencil_degeneracy():
    """Testa estênceis que atravessam o horizonte, r = 0 ou um polo."""
    with pytest.raises(StencilDegeneracyError):
        christoffel_numeric(Params(lam=1.0), Coordinates(r=1.0 - 1e-6), h=1e-5)
    with pytest.raises(StencilDegeneracyError):
        christoffel_numeric(Params(lam=0.0), Coordinates(r=1e-6), h=1e-5)
    with pytest.raises(StencilDegeneracyError):
        christoffel_numeric(Params(lam=0.0), Coordinates(r=0.5, theta=1e-6), h=1e-5)


def test_christoffel_table_shape():
    """Testa a validação da forma da tabela."""
    with pytest.raises(ValueError):
        ChristoffelTable(np.zeros((4, 4)))


def test_four_velocity_at_rest():
    """Testa o fluido em repouso no espaço plano."""
    u = fluid_four_velocity(Params(lam=0.0), r=0.7, v=0.0)

    assert u.u0 == pytest.approx(1.0)
    assert u.u1 == 0.0


def test_four_velocity_de_sitter():
    """Testa a quadrivelocidade com Λ = 1, r = 0.5, v = 0.5."""
    params = Params(lam=1.0)
    u = fluid_four_velocity(params, r=0.5, v=0.5)

    assert u.u0**2 == pytest.approx(16.0 / 9.0)
    assert u.u1**2 == pytest.approx(0.25)
    assert u.u0 > 0
    assert u.u1 > 0

    g = metric_covariant(params, Coordinates(r=0.5))
    assert g.g00 * u.u0**2 + g.g11 * u.u1**2 == pytest.approx(-1.0, abs=1e-12)
    # v = c·u1/((1-Λr²)·u0)
    assert params.c * u.u1 / (0.75 * u.u0) == pytest.approx(0.5)


def test_four_velocity_errors():
    """Testa velocidades superluminais e pontos além do horizonte."""
    with pytest.raises(SuperluminalError):
        fluid_four_velocity(Params(lam=0.0), r=0.5, v=1.0)
    with pytest.raises(SuperluminalError):
        fluid_four_velocity(Params(lam=0.0), r=0.5, v=-1.5)
    with pytest.raises(HorizonSingularityError):
        fluid_four_velocity(Params(lam=1.0), r=1.5, v=0.1)


@settings(max_examples=1000, deadline=None)
@given(
    lam=st.floats(min_value=-2.0, max_value=2.0),
    r=st.floats(min_value=0.0, max_value=0.6),
    v=st.floats(min_value=-0.95, max_value=0.95),
    c=st.floats(min_value=0.5, max_value=2.0),
)
def test_four_velocity_normalization(lam, r, v, c):
    """Testa g00·u0² + g11·u1² = -1 em entradas aleatórias."""
    params = Params(lam=lam, c=c)
    speed = v * c
    u = fluid_four_velocity(params, r=r, v=speed)
    g = metric_covariant(params, Coordinates(r=r))

    assert g.g00 * u.u0**2 + g.g11 * u.u1**2 == pytest.approx(-1.0, abs=1e-12, rel=1e-12)
    assert math.copysign(1.0, u.u1) == math.copysign(1.0, speed) or u.u1 == 0.0


def test_stress_energy_at_rest():
    """Testa poeira em repouso."""
    t = stress_energy_pressureless(Params(lam=0.0), r=0.3, v=0.0, rho=1.0)

    assert t.t00 == pytest.approx(1.0)
    assert t.t01 == 0.0
    assert t.t11 == 0.0


def test_stress_energy_de_sitter():
    """Testa T^{αβ} com Λ = 1, r = 0.5, v = 0.5, ρ = 2."""
    t = stress_energy_pressureless(Params(lam=1.0), r=0.5, v=0.5, rho=2.0)

    assert t.t00 == pytest.approx(32.0 / 9.0)
    assert t.t01 == pytest.approx(4.0 / 3.0)
    assert t.t11 == pytest.approx(0.5)
    assert t.t10 == t.t01
    np.testing.assert_array_equal(t.as_matrix(), t.as_matrix().T)


def test_stress_energy_negative_density():
    """Testa a rejeição de densidade negativa."""
    with pytest.raises(ValueError):
        stress_energy_pressureless(Params(lam=0.0), r=0.3, v=0.1, rho=-1.0)


@settings(max_examples=300, deadline=None)
@given(
    lam=st.floats(min_value=-1.0, max_value=1.0),
    r=st.floats(min_value=0.0, max_value=0.9),
    v=st.floats(min_value=-0.9, max_value=0.9),
    rho=st.floats(min_value=0.0, max_value=5.0),
)
def test_stress_energy_matches_four_velocity(lam, r, v, rho):
    """Testa T^{αβ} = ρc²·u^α·u^β."""
    params = Params(lam=lam)
    u = fluid_four_velocity(params, r=r, v=v)
    t = stress_energy_pressureless(params, r=r, v=v, rho=rho)

    assert t.t00 == pytest.approx(rho * u.u0 * u.u0, rel=1e-12, abs=1e-12)
    assert t.t01 == pytest.approx(rho * u.u0 * u.u1, rel=1e-12, abs=1e-12)
    assert t.t11 == pytest.approx(rho * u.u1 * u.u1, rel=1e-12, abs=1e-12)
