from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Literal

import dotenv
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from .errors import ConfigError
from .models import Status

ORDER_ENV = "NAHM_QSERIES_ORDER"
WORKERS_ENV = "NAHM_QSERIES_WORKERS"
CORPUS_ENV = "NAHM_QSERIES_CORPUS"


def _cpu_count() -> int:
    return os.cpu_count() or 1


@dataclass(slots=True)
class EngineConfig:
    default_order: int = 100
    max_workers: int = field(default_factory=_cpu_count)
    corpus_path: Path | None = None
    fit_guard: int = 64
    fit_periods: int = 2

    @classmethod
    def from_env(cls) -> EngineConfig:
        dotenv.load_dotenv()
        config = cls()
        config.default_order = _env_int(ORDER_ENV, config.default_order)
        config.max_workers = _env_int(WORKERS_ENV, config.max_workers)
        corpus = os.getenv(CORPUS_ENV)
        if corpus:
            config.corpus_path = Path(corpus)
        return config


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


class RunConfig(BaseModel):
    model_config = ConfigDict(arbitrary_types_allowed=True)

    subcommand: str = Field(description="Subcommand being run, e.g. 'verify-all'")
    order: Fraction = Field(
        default=Fraction(100), description="Truncation order; coefficients below q^order are compared"
    )
    corpus_path: Path | None = Field(
        default=None, description="JSON Lines corpus; the built-in corpus when unset"
    )
    format: Literal["text", "json"] = "text"
    parallelism: int = Field(default_factory=_cpu_count, description="Worker processes")
    id_filter: str | None = Field(default=None, description="Glob over identity ids")
    status_filter: Status | None = None

    @field_validator("order", mode="before")
    @classmethod
    def parse_order(cls, value: object) -> Fraction:
        try:
            return Fraction(str(value))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"order must be a rational number, got {value!r}") from None

    @model_validator(mode="after")
    def validate_run(self: RunConfig) -> RunConfig:
        if self.order < 1:
            raise ValueError(f"order must be at least 1, but was {self.order}")
        if self.parallelism < 1:
            raise ValueError(f"parallelism must be at least 1, but was {self.parallelism}")
        return self
