"""Testes para a camada de configuração."""

import json

import pytest

from dsburgers.config import (
    RunConfig,
    build_initial_condition,
    build_params,
    build_scheme,
    parse_config,
    parse_int_list,
    resolve_schedule,
    with_overrides,
)
from dsburgers.errors import CFLViolationError, ConfigError, StaticDomainError
from dsburgers.godunov import DtMode, RiemannInitialCondition, StaticInitialCondition
from dsburgers.model import SourceForm


def test_parse_config_defaults():
    """Testa a mescla de flags com os defaults."""
    config = parse_config({"lambda": 1.0, "nx": 200, "order": 2, "ic": "shock"})

    assert config.lam == 1.0
    assert config.nx == 200
    assert config.order == 2
    assert config.c == 1.0
    assert config.cfl == 0.9
    assert config.source_form == SourceForm.CONSERVATIVE


def test_parse_config_flags_override_file(tmp_path):
    """Testa a precedência flags > arquivo > defaults."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"lambda": 0.5, "nx": 100, "order": 1}))

    config = parse_config({"nx": 400, "order": None}, path)
    assert config.lam == 0.5
    assert config.nx == 400
    assert config.order == 1


def test_parse_config_accepts_field_name_in_file(tmp_path):
    """Testa a chave 'lam' no arquivo."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"lam": -1.0}))

    assert parse_config({}, path).lam == -1.0


def test_parse_config_invalid_order(tmp_path):
    """Testa order fora de {1, 2}."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"order": 3}))

    with pytest.raises(ConfigError) as info:
        parse_config({}, path)
    assert info.value.key == "order"
    assert "order" in str(info.value)


def test_parse_config_unknown_key(tmp_path):
    """Testa a rejeição de chaves desconhecidas."""
    path = tmp_path / "run.json"
    path.write_text(json.dumps({"nx": 100, "resolution": 5}))

    with pytest.raises(ConfigError) as info:
        parse_config({}, path)
    assert info.value.key == "resolution"
    assert "resolution" in str(info.value)


def test_parse_config_malformed_file(tmp_path):
    """Testa um arquivo JSON malformado."""
    path = tmp_path / "run.json"
    path.write_text("{nx: 100")

    with pytest.raises(ConfigError):
        parse_config({}, path)


def test_parse_config_static_radicand():
    """Testa o erro de domínio com N = 2, Λ = 1."""
    with pytest.raises(StaticDomainError):
        parse_config({"lambda": 1.0, "ic": "static", "static_n": 2.0})


def test_parse_config_oversized_dt():
    """Testa a rejeição de dt fixo acima do limite CFL."""
    with pytest.raises(CFLViolationError):
        parse_config({"nx": 100, "dt": 0.05})


def test_parse_config_consistency_rules():
    """Testa combinações inválidas de chaves."""
    with pytest.raises(ConfigError):
        parse_config({"iters": 10, "t_end": 0.5})
    with pytest.raises(ConfigError):
        parse_config({"ic": "riemann", "vl": 0.5})
    with pytest.raises(ConfigError):
        parse_config({"snapshots": [400, 100]})
    with pytest.raises(ConfigError):
        parse_config({"cfl": 1.5})
    with pytest.raises(ConfigError):
        parse_config({"nx_list": [100, 150]})
    with pytest.raises(ConfigError):
        parse_config({"t_end": 0.5, "snapshots": [10]})
    with pytest.raises(ConfigError):
        parse_config({"ic": "static", "lambda": 1.0, "static_n": 0.0})


def test_parse_int_list():
    """Testa a conversão de listas separadas por vírgula."""
    assert parse_int_list("100,400, 600", "snapshots") == [100, 400, 600]
    assert parse_int_list(None, "snapshots") is None
    with pytest.raises(ConfigError):
        parse_int_list("100,abc", "snapshots")


def test_resolve_schedule():
    """Testa o schedule a partir de iters e snapshots."""
    assert resolve_schedule(RunConfig()) == [100]
    assert resolve_schedule(RunConfig(iters=50, snapshots=[10, 20])) == [10, 20, 50]
    assert resolve_schedule(RunConfig(snapshots=[10, 20])) == [10, 20]


def test_build_scheme_fixed_dt():
    """Testa que dt na configuração seleciona o modo FIXED."""
    assert build_scheme(RunConfig()).dt_mode == DtMode.ADAPTIVE
    scheme = build_scheme(RunConfig(dt=1e-3))
    assert scheme.dt_mode == DtMode.FIXED
    assert scheme.fixed_dt == 1e-3


def test_build_initial_condition():
    """Testa a construção das condições iniciais."""
    config = RunConfig(ic="riemann", vl=0.1, vr=0.9, r0=0.4)
    ic = build_initial_condition(config, build_params(config))
    assert isinstance(ic, RiemannInitialCondition)
    assert ic.r0 == 0.4

    config = RunConfig(**{"lambda": 1.0, "ic": "static", "static_n": 0.5})
    assert isinstance(build_initial_condition(config, build_params(config)), StaticInitialCondition)


def test_echo_round_trip():
    """Testa que o eco da configuração revalida para a mesma configuração."""
    config = parse_config({"lambda": 1.0, "source_form": "paper", "snapshots": [10, 20]})
    echoed = config.echo()

    assert echoed["lambda"] == 1.0
    assert echoed["source_form"] == "paper"
    assert RunConfig.model_validate(echoed) == config


def test_with_overrides_revalidates():
    """Testa que with_overrides aplica a validação completa."""
    config = RunConfig(ic="smooth")

    assert with_overrides(config, nx_list=[50, 100]).nx_list == [50, 100]
    with pytest.raises(ConfigError):
        with_overrides(config, nx_list=[50, 75])
