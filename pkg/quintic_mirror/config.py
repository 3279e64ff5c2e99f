from __future__ import annotations

import logging
import os
from dataclasses import dataclass

from dotenv import load_dotenv

load_dotenv()

DEFAULT_LAMBDAS = "1,2,3,-1,-5"
# generic through degree 4; the pairing weights above collide from degree 2 on
DEFAULT_RECURSION_LAMBDAS = "-3,188,15,-180,-20"


def _int_env(name: str, default: int) -> int:
    raw_value = os.getenv(name)
    if raw_value is None:
        return default
    try:
        return int(raw_value)
    except ValueError:
        return default


def _level_env(name: str, default: str) -> str:
    raw_value = (os.getenv(name) or default).strip().upper()
    if raw_value not in logging.getLevelNamesMapping():
        return default
    return raw_value


@dataclass(frozen=True)
class Settings:
    threads: int
    lambdas: str
    recursion_lambdas: str
    instanton_order: int
    sigma_order: int
    equiv_order: int
    log_level: str
    api_host: str
    api_port: int


def load_settings() -> Settings:
    return Settings(
        threads=max(1, _int_env("QUINTIC_THREADS", 1)),
        lambdas=os.getenv("QUINTIC_LAMBDAS", DEFAULT_LAMBDAS),
        recursion_lambdas=os.getenv("QUINTIC_RECURSION_LAMBDAS", DEFAULT_RECURSION_LAMBDAS),
        instanton_order=_int_env("QUINTIC_INSTANTON_ORDER", 10),
        sigma_order=_int_env("QUINTIC_SIGMA_ORDER", 5),
        equiv_order=_int_env("QUINTIC_EQUIV_ORDER", 3),
        log_level=_level_env("QUINTIC_LOG_LEVEL", "INFO"),
        api_host=os.getenv("API_HOST", "0.0.0.0"),
        api_port=_int_env("API_PORT", 8080),
    )


settings = load_settings()
