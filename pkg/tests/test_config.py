from fractions import Fraction
from pathlib import Path

import pytest
from pydantic import ValidationError

from nahm_qseries.config import CORPUS_ENV, ORDER_ENV, WORKERS_ENV, EngineConfig, RunConfig
from nahm_qseries.errors import ConfigError


@pytest.fixture
def clean_env(monkeypatch):
    for name in (ORDER_ENV, WORKERS_ENV, CORPUS_ENV):
        monkeypatch.delenv(name, raising=False)
    return monkeypatch


def test_engine_defaults(clean_env):
    config = EngineConfig.from_env()
    assert config.default_order == 100
    assert config.max_workers >= 1
    assert config.corpus_path is None


def test_engine_reads_environment(clean_env):
    clean_env.setenv(ORDER_ENV, "250")
    clean_env.setenv(WORKERS_ENV, "3")
    clean_env.setenv(CORPUS_ENV, "extra.jsonl")
    config = EngineConfig.from_env()
    assert (config.default_order, config.max_workers) == (250, 3)
    assert config.corpus_path == Path("extra.jsonl")


@pytest.mark.parametrize("value", ["abc", "0", "-4"])
def test_engine_rejects_bad_numbers(clean_env, value):
    clean_env.setenv(ORDER_ENV, value)
    with pytest.raises(ConfigError, match=ORDER_ENV):
        EngineConfig.from_env()


def test_blank_variable_keeps_default(clean_env):
    clean_env.setenv(WORKERS_ENV, " ")
    assert EngineConfig.from_env().max_workers >= 1


def test_run_config_parses_rational_order():
    assert RunConfig(subcommand="eval", order="7/2").order == Fraction(7, 2)
    assert RunConfig(subcommand="eval", order=300).order == 300


@pytest.mark.parametrize(
    "overrides",
    [
        {"order": "abc"},
        {"order": "1/2"},
        {"parallelism": 0},
        {"format": "xml"},
        {"status_filter": "maybe"},
    ],
)
def test_run_config_rejects_invalid_values(overrides):
    with pytest.raises(ValidationError):
        RunConfig(subcommand="verify-all", **overrides)
