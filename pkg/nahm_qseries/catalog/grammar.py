"""Prefix grammar for identity expressions.

    nahm(A=[[2,1],[1,1]],B=[1,1/2],C=0)
    prod(mono(1,-1/24),inv(poch(f(a=mono(1,1),base=1,len=inf,power=1))))
    jquot(num=[J(4)],den=[J(1)],pre=mono(1,0))
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Union

from ..errors import ExpressionParseError, QSeriesError
from ..models import (
    GEtaFactor,
    GEtaList,
    HyperSum,
    JSpec,
    Monomial,
    MultiSum,
    NahmTriple,
    PochFactor,
    PochTemplate,
)
from .expr import (
    ExprNode,
    GEtaNode,
    HyperSumNode,
    InvNode,
    JQuotNode,
    JTripleNode,
    MonomialNode,
    MultiSumNode,
    NahmSumNode,
    PochProductNode,
    ProductNode,
    ScaleNode,
    SubstNode,
    SumNode,
    ThetaNode,
)

TOKEN_RE = re.compile(
    r"(?P<space>[ \t\r]+)|(?P<newline>\n)|(?P<number>-?\d+(?:/\d+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[()\[\],=])"
)


@dataclass(frozen=True, slots=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


@dataclass(slots=True)
class Call:
    name: str
    line: int
    column: int
    args: list = field(default_factory=list)
    kwargs: dict = field(default_factory=dict)


@dataclass(slots=True)
class ListValue:
    items: list
    line: int
    column: int


@dataclass(slots=True)
class Atom:
    value: Union[Fraction, str]
    line: int
    column: int


Value = Union[Call, ListValue, Atom]


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, line_start, pos = 1, 0, 0
    while pos < len(text):
        match = TOKEN_RE.match(text, pos)
        if match is None:
            raise ExpressionParseError(
                f"unexpected character {text[pos]!r}", line, pos - line_start + 1
            )
        kind = match.lastgroup or ""
        if kind == "newline":
            line, line_start = line + 1, match.end()
        elif kind != "space":
            tokens.append(Token(kind, match.group(), line, pos - line_start + 1))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str) -> None:
        self.tokens = tokenize(text)
        self.index = 0
        lines = text.split("\n")
        self.end = (len(lines), len(lines[-1]) + 1)

    def peek(self) -> Token | None:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def fail(self, message: str, token: Token | None = None) -> ExpressionParseError:
        token = token or self.peek()
        if token is None:
            return ExpressionParseError(message, *self.end)
        return ExpressionParseError(message, token.line, token.column)

    def take(self, text: str | None = None, kind: str | None = None) -> Token:
        token = self.peek()
        if token is None:
            raise self.fail(f"expected {text or kind}, found end of input")
        if (text is not None and token.text != text) or (kind is not None and token.kind != kind):
            raise self.fail(f"expected {text or kind}, found {token.text!r}")
        self.index += 1
        return token

    def value(self) -> Value:
        token = self.peek()
        if token is None:
            raise self.fail("expected a value, found end of input")
        if token.kind == "number":
            self.index += 1
            try:
                number = Fraction(token.text)
            except ZeroDivisionError:
                raise self.fail(f"zero denominator in {token.text!r}", token) from None
            return Atom(number, token.line, token.column)
        if token.text == "[":
            return self.list_value()
        if token.kind == "name":
            self.index += 1
            following = self.peek()
            if following is not None and following.text == "(":
                return self.call(token)
            return Atom(token.text, token.line, token.column)
        raise self.fail(f"unexpected {token.text!r}")

    def list_value(self) -> ListValue:
        opening = self.take("[")
        items = []
        while self.peek() is not None and self.peek().text != "]":
            items.append(self.value())
            if self.peek() is not None and self.peek().text == ",":
                self.index += 1
            elif self.peek() is not None and self.peek().text != "]":
                raise self.fail(f"expected ',' or ']', found {self.peek().text!r}")
        self.take("]")
        return ListValue(items, opening.line, opening.column)

    def call(self, name: Token) -> Call:
        call = Call(name.text, name.line, name.column)
        self.take("(")
        while self.peek() is not None and self.peek().text != ")":
            token = self.peek()
            after = self.tokens[self.index + 1] if self.index + 1 < len(self.tokens) else None
            if token.kind == "name" and after is not None and after.text == "=":
                self.index += 2
                if token.text in call.kwargs:
                    raise self.fail(f"duplicate argument {token.text!r}", token)
                call.kwargs[token.text] = self.value()
            else:
                if call.kwargs:
                    raise self.fail("positional argument after keyword argument", token)
                call.args.append(self.value())
            if self.peek() is not None and self.peek().text == ",":
                self.index += 1
            elif self.peek() is not None and self.peek().text != ")":
                raise self.fail(f"expected ',' or ')', found {self.peek().text!r}")
        self.take(")")
        return call

    def document(self) -> Value:
        result = self.value()
        if self.peek() is not None:
            raise self.fail(f"trailing input {self.peek().text!r}")
        return result


def _error(value: Value, message: str) -> ExpressionParseError:
    return ExpressionParseError(message, value.line, value.column)


def _rational(value: Value) -> Fraction:
    if not isinstance(value, Atom) or not isinstance(value.value, Fraction):
        raise _error(value, "expected a rational number")
    return value.value


def _integer(value: Value) -> int:
    number = _rational(value)
    if number.denominator != 1:
        raise _error(value, f"expected an integer, got {number}")
    return number.numerator


def _word(value: Value, choices: tuple[str, ...]) -> str:
    if not isinstance(value, Atom) or value.value not in choices:
        raise _error(value, f"expected one of {', '.join(choices)}")
    return str(value.value)


def _items(value: Value) -> list:
    if not isinstance(value, ListValue):
        raise _error(value, "expected a list")
    return value.items


def _vector(value: Value) -> list[Fraction]:
    return [_rational(item) for item in _items(value)]


def _matrix(value: Value) -> list[list[Fraction]]:
    return [_vector(row) for row in _items(value)]


def _call(value: Value, name: str) -> Call:
    if not isinstance(value, Call) or value.name != name:
        raise _error(value, f"expected {name}(...)")
    return value


class _Args:
    """Keyword and positional access with unknown-argument checks."""

    def __init__(self, call: Call, names: tuple[str, ...]) -> None:
        self.call = call
        self.values: dict[str, Value] = {}
        if len(call.args) > len(names):
            raise _error(call, f"{call.name}() takes at most {len(names)} positional arguments")
        for key, value in zip(names, call.args):
            self.values[key] = value
        for key, value in call.kwargs.items():
            if key not in names:
                raise _error(value, f"{call.name}() got an unexpected argument {key!r}")
            if key in self.values:
                raise _error(value, f"{call.name}() got {key!r} twice")
            self.values[key] = value

    def get(self, key: str, convert: Callable[[Value], object], default: object = None) -> object:
        if key not in self.values:
            if default is None:
                raise _error(self.call, f"{self.call.name}() is missing argument {key!r}")
            return default
        return convert(self.values[key])


def _monomial(value: Value) -> Monomial:
    args = _Args(_call(value, "mono"), ("c", "e"))
    return Monomial(args.get("c", _rational), args.get("e", _rational, Fraction(0)))


def _poch_factor(value: Value) -> PochFactor:
    args = _Args(_call(value, "f"), ("a", "base", "len", "power"))

    def length(v: Value) -> int | str:
        if isinstance(v, Atom) and v.value == "inf":
            return "inf"
        return _integer(v)

    n = args.get("len", length, "inf")
    return PochFactor(
        args.get("a", _monomial),
        args.get("base", _rational, Fraction(1)),
        None if n == "inf" else n,
        args.get("power", _integer, 1),
    )


def _template(value: Value) -> PochTemplate:
    args = _Args(_call(value, "tpl"), ("a", "base", "l", "s", "power"))
    return PochTemplate(
        args.get("a", _monomial),
        args.get("base", _rational, Fraction(1)),
        args.get("l", _integer, 1),
        args.get("s", _integer, 0),
        args.get("power", _integer, 1),
    )


def _jspec(value: Value, sign: int) -> JSpec:
    call = _call(value, "J")
    args = _Args(call, ("first", "second", "power"))
    power = sign * args.get("power", _integer, 1)
    if "second" in args.values:
        return JSpec(args.get("second", _integer), args.get("first", _integer), power)
    return JSpec(args.get("first", _integer), None, power)


def _geta_row(value: Value) -> GEtaFactor:
    row = _items(value)
    if len(row) != 3:
        raise _error(value, "geta-list rows are [delta,g,r]")
    return GEtaFactor(_integer(row[0]), _integer(row[1]), _rational(row[2]))


def _bool(value: Value) -> bool:
    return _word(value, ("true", "false")) == "true"


def _build_nahm(call: Call) -> ExprNode:
    args = _Args(call, ("A", "B", "C"))
    return NahmSumNode(
        NahmTriple(args.get("A", _matrix), args.get("B", _vector), args.get("C", _rational, Fraction(0)))
    )


def _build_multi(call: Call) -> ExprNode:
    args = _Args(call, ("Q", "L", "c", "d"))
    return MultiSumNode(
        MultiSum(
            args.get("Q", _matrix),
            args.get("L", _vector),
            args.get("c", _rational, Fraction(0)),
            tuple(args.get("d", _vector, [])),
        )
    )


def _build_hyper(call: Call) -> ExprNode:
    args = _Args(call, ("alpha", "beta", "gamma", "z", "alt", "terms"))
    return HyperSumNode(
        HyperSum(
            args.get("alpha", _rational),
            args.get("beta", _rational, Fraction(0)),
            args.get("gamma", _rational, Fraction(0)),
            args.get("z", _monomial, Monomial()),
            args.get("alt", _bool, False) is True,
            tuple(args.get("terms", lambda v: [_template(t) for t in _items(v)], [])),
        )
    )


def _build_theta(call: Call) -> ExprNode:
    args = _Args(call, ("alpha", "nu"))
    return ThetaNode(args.get("alpha", _rational), args.get("nu", _rational, Fraction(0)))


def _build_jtriple(call: Call) -> ExprNode:
    args = _Args(call, ("z", "form"))
    return JTripleNode(
        args.get("z", _monomial), args.get("form", lambda v: _word(v, ("product", "sum")), "product")
    )


def _build_poch(call: Call) -> ExprNode:
    if call.kwargs:
        raise _error(call, "poch() takes Pochhammer factors as positional arguments")
    return PochProductNode(tuple(_poch_factor(v) for v in call.args))


def _build_jquot(call: Call) -> ExprNode:
    args = _Args(call, ("num", "den", "pre"))
    num = args.get("num", lambda v: [_jspec(s, 1) for s in _items(v)], [])
    den = args.get("den", lambda v: [_jspec(s, -1) for s in _items(v)], [])
    return JQuotNode(tuple(num) + tuple(den), args.get("pre", _monomial, Monomial()))


def _build_geta(call: Call) -> ExprNode:
    args = _Args(call, ("level", "list"))
    rows = args.get("list", lambda v: [_geta_row(r) for r in _items(v)])
    return GEtaNode(GEtaList(args.get("level", _integer), tuple(rows)))


def _build_mono(call: Call) -> ExprNode:
    return MonomialNode(_monomial(call))


def _build_scale(call: Call) -> ExprNode:
    args = _Args(call, ("child", "c"))
    return ScaleNode(args.get("child", build_node), args.get("c", _rational))


def _build_sum(call: Call) -> ExprNode:
    if call.kwargs:
        raise _error(call, "sum() takes expressions as positional arguments")
    return SumNode(tuple(build_node(v) for v in call.args))


def _build_prod(call: Call) -> ExprNode:
    if call.kwargs:
        raise _error(call, "prod() takes expressions as positional arguments")
    return ProductNode(tuple(build_node(v) for v in call.args))


def _build_inv(call: Call) -> ExprNode:
    args = _Args(call, ("child",))
    return InvNode(args.get("child", build_node))


def _build_subst(call: Call) -> ExprNode:
    args = _Args(call, ("child", "k"))
    return SubstNode(args.get("child", build_node), args.get("k", _rational))


BUILDERS: dict[str, Callable[[Call], ExprNode]] = {
    "nahm": _build_nahm,
    "multi": _build_multi,
    "hyper": _build_hyper,
    "theta": _build_theta,
    "jtriple": _build_jtriple,
    "poch": _build_poch,
    "jquot": _build_jquot,
    "geta": _build_geta,
    "mono": _build_mono,
    "scale": _build_scale,
    "sum": _build_sum,
    "prod": _build_prod,
    "inv": _build_inv,
    "subst": _build_subst,
}


def build_node(value: Value) -> ExprNode:
    if not isinstance(value, Call):
        raise _error(value, "expected an expression")
    builder = BUILDERS.get(value.name)
    if builder is None:
        raise _error(value, f"unknown expression {value.name!r}")
    try:
        return builder(value)
    except ExpressionParseError:
        raise
    except (QSeriesError, ValueError, ZeroDivisionError) as exc:
        raise _error(value, str(exc)) from exc


def parse_expr(text: str) -> ExprNode:
    return build_node(_Parser(text).document())


def serialize(node: ExprNode) -> str:
    return node.render()
