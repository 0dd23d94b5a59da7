from .config import EngineConfig, RunConfig
from .errors import (
    ConfigError,
    ExpressionParseError,
    InconsistentResidualsError,
    ModularityError,
    NahmError,
    ProductError,
    QSeriesError,
    SeriesError,
)
from .formatters import format_series, parse_series
from .models import GEtaFactor, GEtaList, HyperSum, JSpec, Monomial, MultiSum, NahmTriple, PochFactor
from .orchestrator import VerificationRunner
from .series import PSeries

__all__ = [
    "ConfigError",
    "EngineConfig",
    "ExpressionParseError",
    "GEtaFactor",
    "GEtaList",
    "HyperSum",
    "InconsistentResidualsError",
    "JSpec",
    "ModularityError",
    "Monomial",
    "MultiSum",
    "NahmError",
    "NahmTriple",
    "PSeries",
    "PochFactor",
    "ProductError",
    "QSeriesError",
    "RunConfig",
    "SeriesError",
    "VerificationRunner",
    "format_series",
    "parse_series",
]
