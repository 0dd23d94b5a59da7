"""JSON Lines corpus files and machine-readable run documents."""
from __future__ import annotations

import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from pydantic import BaseModel, Field, ValidationError, field_validator

from ..errors import ExpressionParseError
from ..models import Status
from .expr import Identity
from .grammar import parse_expr, serialize
from .verify import Outcome, VerifyReport

logger = logging.getLogger(__name__)


class IdentityRecord(BaseModel):
    id: str = Field(min_length=1)
    status: Status = "auxiliary"
    provenance: str = ""
    note: str = ""
    lhs: str
    rhs: str
    C: str | None = Field(default=None, description="Rational constant of a modular triple")
    q_scale: int = Field(default=1, ge=1)

    @field_validator("C")
    @classmethod
    def validate_C(cls, value: str | None) -> str | None:
        if value is None:
            return None
        try:
            return str(Fraction(value))
        except (ValueError, ZeroDivisionError):
            raise ValueError(f"C must be a rational number, got {value!r}") from None

    @classmethod
    def from_identity(cls, identity: Identity) -> IdentityRecord:
        return cls(
            id=identity.id,
            status=identity.status,
            provenance=identity.provenance,
            note=identity.note,
            lhs=serialize(identity.lhs),
            rhs=serialize(identity.rhs),
            C=None if identity.C is None else str(identity.C),
            q_scale=identity.q_scale,
        )

    def to_identity(self) -> Identity:
        sides = {}
        for side in ("lhs", "rhs"):
            try:
                sides[side] = parse_expr(getattr(self, side))
            except ExpressionParseError as exc:
                raise ExpressionParseError(f"{side}: {exc.message}", exc.line, exc.column) from exc
        return Identity(
            self.id,
            sides["lhs"],
            sides["rhs"],
            self.status,
            self.provenance,
            self.note,
            None if self.C is None else Fraction(self.C),
            self.q_scale,
        )


def load_corpus(path: Path | str) -> list[Identity]:
    """One identity per line; errors carry the file line and the column inside the expression."""
    identities: list[Identity] = []
    seen: set[str] = set()
    with Path(path).open(encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                data = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ExpressionParseError(f"invalid JSON: {exc.msg}", line_no, exc.colno) from exc
            try:
                record = IdentityRecord.model_validate(data)
            except ValidationError as exc:
                first = exc.errors()[0]
                field = ".".join(str(part) for part in first["loc"]) or "record"
                raise ExpressionParseError(f"{field}: {first['msg']}", line_no, 1) from exc
            try:
                identity = record.to_identity()
            except ExpressionParseError as exc:
                raise ExpressionParseError(exc.message, line_no, exc.column) from exc
            if identity.id in seen:
                raise ExpressionParseError(f"duplicate identity id {identity.id!r}", line_no, 1)
            seen.add(identity.id)
            identities.append(identity)
    logger.debug("loaded %d identities from %s", len(identities), path)
    return identities


def dump_corpus(identities: Iterable[Identity], path: Path | str) -> None:
    records = sorted((IdentityRecord.from_identity(i) for i in identities), key=lambda r: r.id)
    with Path(path).open("w", encoding="utf-8") as handle:
        for record in records:
            handle.write(record.model_dump_json(exclude_defaults=True) + "\n")


class RunResult(BaseModel):
    id: str
    outcome: Outcome
    exponent: str | None = None
    lhs_coeff: str | None = None
    rhs_coeff: str | None = None
    error: str | None = None


class RunDocument(BaseModel):
    order: str
    results: list[RunResult]
    timings: dict[str, float] | None = None

    @classmethod
    def from_reports(
        cls, reports: Sequence[VerifyReport], order: Fraction, include_timings: bool = False
    ) -> RunDocument:
        results = [
            RunResult(
                id=report.identity_id,
                outcome=report.outcome,
                exponent=None if report.exponent is None else str(report.exponent),
                lhs_coeff=None if report.lhs_coeff is None else str(report.lhs_coeff),
                rhs_coeff=None if report.rhs_coeff is None else str(report.rhs_coeff),
                error=report.error,
            )
            for report in sorted(reports, key=lambda r: r.identity_id)
        ]
        timings = (
            {report.identity_id: round(report.elapsed_s, 4) for report in reports}
            if include_timings
            else None
        )
        return cls(order=str(order), results=results, timings=timings)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, exclude_none=True)
