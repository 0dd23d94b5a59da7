from __future__ import annotations

from fractions import Fraction


class QSeriesError(ValueError):
    """Base class for every error raised by the engine."""


class SeriesError(QSeriesError):
    pass


class ProductError(QSeriesError):
    pass


class NahmError(QSeriesError):
    pass


class ModularityError(QSeriesError):
    pass


class InconsistentResidualsError(ModularityError):
    def __init__(self, residuals: list[Fraction]) -> None:
        self.residuals = list(residuals)
        listed = ", ".join(str(r) for r in self.residuals)
        super().__init__(f"inconsistent residual q-powers: {{{listed}}}")


class ExpressionParseError(QSeriesError):
    def __init__(self, message: str, line: int = 1, column: int = 1) -> None:
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class ConfigError(QSeriesError):
    pass
