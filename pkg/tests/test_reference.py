"""Testes para o módulo reference."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from dsburgers.errors import FrontNotFoundError, PreShockError
from dsburgers.godunov import ConstantProfile, Grid, SineProfile, State
from dsburgers.reference import (
    ErrorReport,
    RiemannData,
    error_norms,
    exact_riemann_classical,
    exact_smooth_classical,
    front_position,
    observed_order,
    plain_burgers_step,
)


def test_riemann_shock():
    """Testa o choque com velocidade (vl + vr)/2."""
    data = RiemannData(vl=0.8, vr=0.2, r0=0.3)

    assert exact_riemann_classical(data, 1.0, 0.79) == 0.8
    assert exact_riemann_classical(data, 1.0, 0.81) == 0.2


def test_riemann_rarefaction():
    """Testa o leque de rarefação."""
    data = RiemannData(vl=0.2, vr=0.8, r0=0.3)

    assert exact_riemann_classical(data, 1.0, 0.7) == pytest.approx(0.4)
    assert exact_riemann_classical(data, 1.0, 0.4) == 0.2
    assert exact_riemann_classical(data, 1.0, 1.2) == 0.8


def test_riemann_initial_data():
    """Testa t = 0."""
    data = RiemannData(vl=0.2, vr=0.8, r0=0.3)
    values = exact_riemann_classical(data, 0.0, np.array([0.1, 0.29, 0.3, 0.9]))

    np.testing.assert_array_equal(values, [0.2, 0.2, 0.8, 0.8])


def test_riemann_data_validation():
    """Testa r0 fora de [0, 1] e t negativo."""
    with pytest.raises(ValueError):
        RiemannData(vl=1.0, vr=0.0, r0=-0.1)
    with pytest.raises(ValueError):
        exact_riemann_classical(RiemannData(vl=1.0, vr=0.0, r0=0.5), -1.0, 0.5)


@given(
    vl=st.floats(min_value=-2.0, max_value=2.0),
    vr=st.floats(min_value=-2.0, max_value=2.0),
)
def test_riemann_rankine_hugoniot(vl, vr):
    """Testa o salto do fluxo igual a s vezes o salto do estado."""
    if vl <= vr:
        return
    data = RiemannData(vl=vl, vr=vr, r0=0.5)

    flux_jump = 0.5 * vl * vl - 0.5 * vr * vr
    assert flux_jump == pytest.approx(data.shock_speed * (vl - vr), abs=1e-12)


def test_riemann_rarefaction_continuity():
    """Testa a continuidade do leque nas bordas."""
    data = RiemannData(vl=-0.3, vr=0.6, r0=0.4)
    t = 0.5
    for edge in (data.r0 + data.vl * t, data.r0 + data.vr * t):
        left = exact_riemann_classical(data, t, edge - 1e-13)
        right = exact_riemann_classical(data, t, edge + 1e-13)
        assert abs(left - right) <= 1e-12


def test_smooth_constant_profile():
    """Testa que perfis constantes são soluções exatas."""
    profile = ConstantProfile(0.7)

    assert exact_smooth_classical(profile, 0.5, 0.3) == pytest.approx(0.7, abs=1e-12)
    np.testing.assert_allclose(
        exact_smooth_classical(profile, 3.0, np.linspace(0, 1, 5)), 0.7, atol=1e-12
    )


def test_smooth_initial_time():
    """Testa t = 0."""
    profile = SineProfile()
    r = np.linspace(0.0, 1.0, 11)

    np.testing.assert_array_equal(exact_smooth_classical(profile, 0.0, r), profile(r))


def test_smooth_fixed_point():
    """Testa que o resultado satisfaz v = v0(r - v·t)."""
    profile = SineProfile()
    v = exact_smooth_classical(profile, 0.1, 0.5)

    assert v == pytest.approx(profile(0.5 - 0.1 * v), abs=1e-11)


def test_smooth_pre_shock_only():
    """Testa a rejeição de tempos após a formação de choque."""
    profile = SineProfile()
    shock_time = 1.0 / (0.25 * 2.0 * math.pi)

    assert profile.breaking_time() == pytest.approx(shock_time)
    with pytest.raises(PreShockError):
        exact_smooth_classical(profile, shock_time + 0.01, 0.5)


def test_smooth_pde_residual():
    """Testa ∂t v + v ∂r v ≈ 0 por diferenças centrais."""
    profile = SineProfile()
    h = 1e-5
    r = np.linspace(0.05, 0.95, 19)
    t = 0.2

    v = exact_smooth_classical(profile, t, r)
    later = exact_smooth_classical(profile, t + h, r)
    dv_dt = (later - exact_smooth_classical(profile, t - h, r)) / (2 * h)
    outer = exact_smooth_classical(profile, t, r + h)
    dv_dr = (outer - exact_smooth_classical(profile, t, r - h)) / (2 * h)
    assert np.max(np.abs(dv_dt + v * dv_dr)) <= 1e-6


def test_front_position_step():
    """Testa a frente de um degrau no centro da célula 30 de 100."""
    grid = Grid(nx=100)
    v = np.where(np.arange(100) < 30, 0.8, 0.2)

    position = front_position(State(v=v), grid, 0.5)
    assert position == pytest.approx(0.305, abs=grid.dr)


def test_front_position_rightmost_crossing():
    """Testa que o cruzamento mais à direita é o retornado."""
    grid = Grid(nx=10)
    v = np.array([0.0, 1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 1.0, 0.0, 0.0])

    assert front_position(v, grid, 0.5) == pytest.approx(0.8)


def test_front_position_ramp():
    """Testa uma rampa monótona com inversa conhecida."""
    grid = Grid(nx=200)
    v = 1.0 - 2.0 * grid.centers

    assert front_position(v, grid, 0.3) == pytest.approx(0.35, abs=grid.dr)


def test_front_position_not_found():
    """Testa um snapshot constante."""
    with pytest.raises(FrontNotFoundError):
        front_position(np.full(10, 0.5), Grid(nx=10), 0.7)


def test_error_norms_exact():
    """Testa erro nulo quando o estado coincide com o oráculo."""
    grid = Grid(nx=50)
    report = error_norms(State(v=np.sin(grid.centers)), np.sin, grid)

    assert report.l1 == 0.0
    assert report.linf == 0.0
    assert report.observed_order is None


def test_error_norms_constant_offset():
    """Testa um deslocamento constante δ."""
    grid = Grid(nx=64)
    delta = 0.01
    report = error_norms(grid.centers + delta, lambda r: r, grid)

    assert report.l1 == pytest.approx(delta)
    assert report.linf == pytest.approx(delta)
    assert report.l1 <= report.linf * 1.0 + 1e-15


def test_error_norms_window_and_order():
    """Testa a janela de medição e a ordem observada."""
    coarse = ErrorReport(l1=0.04, linf=0.1)
    grid = Grid(nx=10)
    v = np.where(grid.centers < 0.5, 1.0, 0.01)

    report = error_norms(v, lambda r: np.zeros_like(r), grid, window=(0.5, 1.0), coarse=coarse)
    assert report.l1 == pytest.approx(0.005)
    assert report.observed_order == pytest.approx(math.log2(8.0))


def test_observed_order():
    """Testa log2(e_grosso/e_fino)."""
    assert observed_order(0.04, 0.01) == pytest.approx(2.0)
    assert observed_order(0.09, 0.03, ratio=3.0) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        observed_order(0.0, 0.1)


def test_plain_burgers_constant_state():
    """Testa que um estado constante não muda."""
    v = np.full(20, 0.4)

    np.testing.assert_array_equal(plain_burgers_step(v, 0.05, 0.04), v)
