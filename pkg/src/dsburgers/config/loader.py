"""Carga, mescla e validação da configuração."""

import json
from pathlib import Path
from typing import Any

from pydantic import ValidationError

from dsburgers.config.models import RunConfig
from dsburgers.errors import ConfigError, InvariantViolationError, UnknownKeyError
from dsburgers.geometry.models import Params
from dsburgers.godunov.initial import (
    RAREFACTION_PRESET,
    SHOCK_PRESET,
    ConstantProfile,
    FileInitialCondition,
    InitialCondition,
    ProfileInitialCondition,
    RiemannInitialCondition,
    SineProfile,
    StaticInitialCondition,
)
from dsburgers.godunov.models import DtMode, Grid, SchemeConfig
from dsburgers.godunov.scheme import validate_fixed_dt
from dsburgers.model.models import StaticSolutionSpec

DEFAULT_NX = 200
DEFAULT_ITERS = 100


def load_config_file(path: str | Path) -> dict[str, Any]:
    """
    Lê um arquivo de configuração JSON.

    Raises:
        ConfigError: se o arquivo não puder ser lido ou não for um objeto JSON
    """
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except OSError as e:
        raise ConfigError(f"Não foi possível ler o arquivo de configuração {path}: {e}") from e
    except json.JSONDecodeError as e:
        raise ConfigError(f"Arquivo de configuração malformado {path}: {e}") from e
    if not isinstance(data, dict):
        raise ConfigError(f"Arquivo de configuração {path} precisa conter um objeto JSON")
    # Aceita tanto a chave "lambda" quanto o nome do campo
    if "lam" in data:
        data["lambda"] = data.pop("lam")
    return data


def parse_config(
    flags: dict[str, Any] | None = None,
    config_file: str | Path | None = None,
) -> RunConfig:
    """
    Mescla flags sobre o arquivo sobre os defaults e valida o resultado.

    Flags com valor None não sobrescrevem o arquivo. A chave de Λ é "lambda".

    Raises:
        ConfigError: arquivo malformado
        UnknownKeyError: chave desconhecida
        InvariantViolationError: valor fora do domínio ou combinação inconsistente
        DomainError: configuração estruturalmente válida mas fisicamente inválida
    """
    merged: dict[str, Any] = load_config_file(config_file) if config_file else {}
    for key, value in (flags or {}).items():
        if value is not None:
            merged[key] = value

    try:
        config = RunConfig.model_validate(merged)
    except ValidationError as e:
        raise _config_error(e) from e

    validate_physics(config)
    return config


def validate_physics(config: RunConfig) -> None:
    """
    Revalida os invariantes físicos que dependem de mais de um campo.

    Raises:
        StaticDomainError: radicando negativo na solução estática
        CFLViolationError: dt fixo acima do limite CFL
    """
    params = build_params(config)
    if config.ic == "static":
        StaticSolutionSpec.create(params, config.static_n, config.static_sign)
    if config.dt is not None:
        validate_fixed_dt(build_grid(config), params, build_scheme(config))


def with_overrides(config: RunConfig, **updates: Any) -> RunConfig:
    """Copia a configuração com novos valores, revalidando tudo."""
    try:
        config = RunConfig.model_validate(config.echo() | updates)
    except ValidationError as e:
        raise _config_error(e) from e
    validate_physics(config)
    return config


def build_params(config: RunConfig, lam: float | None = None) -> Params:
    return Params(lam=config.lam if lam is None else lam, c=config.c)


def build_grid(config: RunConfig, default_nx: int = DEFAULT_NX, nx: int | None = None) -> Grid:
    return Grid(nx=nx or config.nx or default_nx)


def build_scheme(
    config: RunConfig,
    order: int | None = None,
    fixed_dt: float | None = None,
) -> SchemeConfig:
    """Monta o SchemeConfig; com dt (da config ou explícito) o modo é FIXED."""
    dt = fixed_dt if fixed_dt is not None else config.dt
    return SchemeConfig(
        order=order or config.order,
        cfl_number=config.cfl,
        source_form=config.source_form,
        limiter=config.limiter,
        dt_mode=DtMode.FIXED if dt is not None else DtMode.ADAPTIVE,
        fixed_dt=dt,
    )


def build_initial_condition(config: RunConfig, params: Params) -> InitialCondition:
    """Cria a condição inicial descrita pela configuração."""
    if config.ic == "shock":
        return SHOCK_PRESET
    if config.ic == "rarefaction":
        return RAREFACTION_PRESET
    if config.ic == "riemann":
        return RiemannInitialCondition(vl=config.vl, vr=config.vr, r0=config.r0)
    if config.ic == "static":
        spec = StaticSolutionSpec.create(params, config.static_n, config.static_sign)
        return StaticInitialCondition(params=params, spec=spec)
    if config.ic == "file":
        return FileInitialCondition(path=config.ic_file)
    if config.ic == "smooth":
        return ProfileInitialCondition(SineProfile(mean=config.mean, amplitude=config.amplitude))
    return ProfileInitialCondition(ConstantProfile(config.value))


def resolve_schedule(config: RunConfig) -> list[int]:
    """Iterações a gravar: os snapshots pedidos mais a iteração final."""
    iters = config.iters
    if iters is None:
        iters = config.snapshots[-1] if config.snapshots else DEFAULT_ITERS
    schedule = list(config.snapshots or [])
    if not schedule or schedule[-1] < iters:
        schedule.append(iters)
    return schedule


def _config_error(error: ValidationError) -> ConfigError:
    """
    Converte o erro do pydantic nomeando a chave problemática.

    Chaves desconhecidas viram UnknownKeyError; o resto, InvariantViolationError.
    """
    errors = error.errors()
    first = next((e for e in errors if e["type"] == "extra_forbidden"), errors[0])
    key = ".".join(str(part) for part in first["loc"]) or None
    if first["type"] == "extra_forbidden":
        return UnknownKeyError(f"Chave desconhecida: '{key}'", key=key)
    if key:
        message = f"Valor inválido para '{key}': {first['msg']}"
    else:
        message = f"Configuração inválida: {first['msg']}"
    return InvariantViolationError(message, key=key)


def parse_int_list(text: str | None, key: str) -> list[int] | None:
    """Converte '100,400,600' em [100, 400, 600]."""
    if text is None:
        return None
    try:
        return [int(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(f"Lista de inteiros inválida para '{key}': {text!r}", key=key) from e


def parse_float_list(text: str | None, key: str) -> list[float] | None:
    """Converte '0,1,-1' em [0.0, 1.0, -1.0]."""
    if text is None:
        return None
    try:
        return [float(item) for item in text.split(",") if item.strip()]
    except ValueError as e:
        raise ConfigError(f"Lista de números inválida para '{key}': {text!r}", key=key) from e
