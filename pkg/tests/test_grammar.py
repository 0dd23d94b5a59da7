from fractions import Fraction

import pytest

from nahm_qseries.catalog import builtin_corpus, builtin_dissections, eval_expr, parse_expr, serialize
from nahm_qseries.catalog import grammar
from nahm_qseries.catalog.expr import JQuotNode, JTripleNode, NahmSumNode, SubstNode
from nahm_qseries.errors import ExpressionParseError, ProductError
from nahm_qseries.models import JSpec, Monomial, NahmTriple


def test_parse_nahm_triple():
    node = parse_expr("nahm(A=[[2]],B=[0],C=0)")
    assert node == NahmSumNode(NahmTriple([[2]], [0], 0))
    assert [eval_expr(node, 5).coeff(n) for n in range(5)] == [1, 1, 1, 1, 2]


def test_positional_and_keyword_arguments_agree():
    assert parse_expr("subst(nahm([[2]],[0]),3)") == parse_expr("subst(child=nahm(A=[[2]],B=[0],C=0),k=3)")
    node = parse_expr("subst(nahm(A=[[1/3,-1/3],[-1/3,4/3]],B=[-1/6,2/3]),k=3)")
    assert isinstance(node, SubstNode)
    assert node.k == 3
    assert node.child.triple.A[0][0] == Fraction(1, 3)


def test_jquot_is_normalized():
    node = parse_expr("jquot(num=[J(4),J(3,8)],den=[J(1),J(5,8)],pre=mono(2,1/8))")
    assert node == JQuotNode((JSpec(1, None, -1), JSpec(4)), Monomial(2, Fraction(1, 8)))


def test_whitespace_and_newlines_are_ignored():
    text = "sum(\n  mono(1, 0),\n  scale(theta(alpha=2), c=-1)\n)"
    assert not eval_expr(parse_expr(text), 10).is_zero()
    assert serialize(parse_expr(text)) == "sum(mono(1,0),scale(theta(alpha=2,nu=0),c=-1))"


@pytest.mark.parametrize("identity", builtin_corpus(), ids=lambda identity: identity.id)
def test_corpus_expressions_round_trip(identity):
    for side in (identity.lhs, identity.rhs):
        assert parse_expr(serialize(side)) == side


def test_dissection_expressions_round_trip():
    for case in builtin_dissections():
        assert parse_expr(serialize(case.lhs)) == case.lhs
        for node in case.expected.values():
            if node is not None:
                assert parse_expr(serialize(node)) == node


@pytest.mark.parametrize(
    "text, line, column, message",
    [
        ("mono(1,$)", 1, 8, "unexpected character"),
        ("sum(\n  mono(1,0),\n  bogus(1)\n)", 3, 3, "unknown expression 'bogus'"),
        ("nahm(A=[[2]])", 1, 1, "missing argument 'B'"),
        ("nahm(A=[[2]],B=[0],D=1)", 1, 22, "unexpected argument 'D'"),
        ("mono(1,0) mono(1,0)", 1, 11, "trailing input"),
        ("mono(1,0", 1, 9, "found end of input"),
        ("mono(c=1,0)", 1, 10, "positional argument after keyword"),
        ("jquot(num=[J(1/2)])", 1, 14, "expected an integer"),
        ("nahm(A=[[2,1],[0,2]],B=[0,0])", 1, 1, "symmetric"),
        ("hyper(alpha=1,alt=maybe)", 1, 19, "expected one of true, false"),
        ("mono(1/0,1)", 1, 6, "zero denominator"),
        ("sum(mono(1,0),\n  jquot(num=[J(5,1)],pre=mono(2/0,0)))", 2, 32, "zero denominator"),
    ],
)
def test_parse_errors_carry_positions(text, line, column, message):
    with pytest.raises(ExpressionParseError, match=message) as info:
        parse_expr(text)
    assert (info.value.line, info.value.column) == (line, column)


def test_builder_value_errors_carry_positions(monkeypatch):
    def failing(call):
        raise ValueError("bad shape")

    monkeypatch.setitem(grammar.BUILDERS, "theta", failing)
    with pytest.raises(ExpressionParseError, match="bad shape") as info:
        parse_expr("sum(mono(1,0),\n  theta(alpha=1))")
    assert (info.value.line, info.value.column) == (2, 3)


def test_triple_product_form_is_checked():
    with pytest.raises(ProductError, match="form"):
        JTripleNode(Monomial(1, 1), "series")
