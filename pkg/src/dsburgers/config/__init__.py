"""Configuração de execuções: modelo pydantic e carga de arquivo/flags."""

from dsburgers.config.loader import (
    build_grid,
    build_initial_condition,
    build_params,
    build_scheme,
    load_config_file,
    parse_config,
    parse_float_list,
    parse_int_list,
    resolve_schedule,
    validate_physics,
    with_overrides,
)
from dsburgers.config.models import RunConfig

__all__ = [
    "RunConfig",
    "build_grid",
    "build_initial_condition",
    "build_params",
    "build_scheme",
    "load_config_file",
    "parse_config",
    "parse_float_list",
    "parse_int_list",
    "resolve_schedule",
    "validate_physics",
    "with_overrides",
]
