from __future__ import annotations

import re
from fractions import Fraction
from typing import TYPE_CHECKING, Sequence

from .errors import ExpressionParseError
from .models import GEtaList, JSpec, ModularityReport, Monomial, Rational, as_rational

if TYPE_CHECKING:
    from .catalog.verify import VerifyReport
    from .series import PSeries


def format_exponent(exp: Fraction) -> str:
    if exp == 0:
        return ""
    if exp == 1:
        return "q"
    if exp.denominator == 1 and exp > 0:
        return f"q^{exp.numerator}"
    return f"q^{{{exp}}}"


def _format_term(coeff: Fraction, exp: Fraction, first: bool) -> str:
    sign = "-" if coeff < 0 else "+"
    magnitude = abs(coeff)
    power = format_exponent(exp)
    if not power:
        body = str(magnitude)
    elif magnitude == 1:
        body = power
    elif magnitude.denominator == 1:
        body = f"{magnitude}{power}"
    else:
        body = f"({magnitude}){power}"
    if first:
        return body if sign == "+" else f"-{body}"
    return f"{sign} {body}"


def format_series(s: PSeries) -> str:
    """Lowest exponent first; parse_series reads the same text back."""
    terms = [_format_term(Fraction(c), e, i == 0) for i, (e, c) in enumerate(s.items())]
    return " ".join(terms) if terms else "0"


_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*"
    r"(?:\((?P<frac>\d+/\d+)\)|(?P<bare>\d+/\d+)|(?P<int>\d+))?"
    r"(?P<q>q(?:\^(?:(?P<pow>\d+)|\{(?P<braced>-?\d+(?:/\d+)?)\}))?)?\s*"
)


def parse_series(text: str, order: Rational) -> PSeries:
    from .series import PSeries

    order = as_rational(order)
    if text.strip() == "0":
        return PSeries.zero(order)
    terms: list[tuple[Fraction, Fraction]] = []
    pos = 0
    while pos < len(text):
        match = _TERM_RE.match(text, pos)
        if match is None or match.end() == pos:
            raise ExpressionParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        if match.group("sign") is None and terms:
            raise ExpressionParseError("missing '+' or '-' between terms", 1, pos + 1)
        number = match.group("int") or match.group("frac") or match.group("bare")
        if number is None and match.group("q") is None:
            raise ExpressionParseError("expected a coefficient or q", 1, match.end() + 1)
        if match.group("bare") and match.group("q"):
            raise ExpressionParseError("fractional coefficients need parentheses", 1, pos + 1)
        coeff = Fraction(number) if number else Fraction(1)
        if match.group("sign") == "-":
            coeff = -coeff
        if match.group("q") is None:
            exp = Fraction(0)
        elif match.group("pow"):
            exp = Fraction(match.group("pow"))
        elif match.group("braced"):
            exp = Fraction(match.group("braced"))
        else:
            exp = Fraction(1)
        terms.append((exp, coeff))
        pos = match.end()
    if not terms:
        raise ExpressionParseError("empty series", 1, 1)
    return PSeries.from_terms(terms, order)


def format_jquot(specs: Sequence[JSpec], prefactor: Monomial = Monomial()) -> str:
    def factor(spec: JSpec) -> str:
        name = f"J_{spec.modulus}" if spec.residue is None else f"J_{{{spec.residue},{spec.modulus}}}"
        power = abs(spec.power)
        return name if power == 1 else f"{name}^{power}"

    num = [factor(s) for s in specs if s.power > 0]
    den = [factor(s) for s in specs if s.power < 0]
    lead = []
    if prefactor.coeff != 1 or (not num and prefactor.exp == 0):
        lead.append(str(prefactor.coeff))
    if prefactor.exp != 0:
        lead.append(format_exponent(prefactor.exp))
    text = " ".join(lead + num) or "1"
    if den:
        text += " / (" + " ".join(den) + ")"
    return text


def format_report_line(report: VerifyReport, show_timing: bool = False) -> str:
    if report.outcome == "equal":
        line = f"{report.identity_id}: equal to order {report.order}"
    elif report.outcome == "mismatch":
        line = (
            f"{report.identity_id}: mismatch at {format_exponent(report.exponent) or 'q^0'} "
            f"(lhs {report.lhs_coeff}, rhs {report.rhs_coeff}, order {report.order})"
        )
    else:
        line = f"{report.identity_id}: error: {report.error}"
    if show_timing:
        line += f" [{report.elapsed_s:.2f}s]"
    return line


def format_summary(reports: Sequence[VerifyReport]) -> str:
    counts = {"equal": 0, "mismatch": 0, "error": 0}
    for report in reports:
        counts[report.outcome] += 1
    return (
        f"{len(reports)} identities checked: {counts['equal']} equal, "
        f"{counts['mismatch']} mismatch, {counts['error']} error"
    )


def format_verify_errors(reports: Sequence[VerifyReport], max_items: int = 3) -> str:
    failed = [r for r in reports if r.outcome != "equal"]
    if not failed:
        return ""
    lines = ["Verification failures:"]
    for report in failed[:max_items]:
        lines.append(f"- {format_report_line(report)}")
    if len(failed) > max_items:
        lines.append(f"- ... and {len(failed) - max_items} more")
    return "\n".join(lines)


def _parity(value: Fraction) -> str:
    if value.denominator == 1 and value.numerator % 2 == 0:
        return "which is even."
    return "which is not an even integer."


def format_modularity_trace(geta: GEtaList, report: ModularityReport) -> str:
    lines = [f"geta-list at level {geta.level}"]
    if all(geta.level % f.delta == 0 for f in geta.factors):
        lines.append(f"All n are divisors of N={geta.level}")
    lines.append(f"val0={report.val0}")
    lines.append(_parity(report.val0))
    lines.append(f"valinf={report.valinf}")
    lines.append(_parity(report.valinf))
    if report.is_modular:
        lines.append(f"It IS a modfunc on Gamma1({geta.level})")
    else:
        lines.append("criterion not met")
    return "\n".join(lines)
