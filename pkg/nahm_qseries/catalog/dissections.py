"""Expected m-dissection components of the 3-, 2- and 4-dissected sum sides.

A component of ``None`` is expected to vanish identically.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import corpus_index
from .expr import ExprNode
from .families import jq, subst

HALF = Fraction(1, 2)


@dataclass(frozen=True, slots=True)
class DissectionCase:
    id: str
    lhs: ExprNode
    m: int
    expected: dict[int, ExprNode | None] = field(default_factory=dict)


def _lhs(identity_id: str) -> ExprNode:
    return corpus_index()[identity_id].lhs


def builtin_dissections() -> list[DissectionCase]:
    return [
        DissectionCase(
            "exam5-1-F",
            _lhs("exam5-1"),
            3,
            {0: jq([2, 15, (6, 30), (9, 30)], [1, 1, 30, 30], 2), 2: None},
        ),
        DissectionCase(
            "exam5-2-G",
            _lhs("exam5-2"),
            3,
            {1: None, 2: jq([2, 15, (3, 30), (12, 30)], [1, 1, 30, 30], 2)},
        ),
        DissectionCase(
            "exam7-1-F",
            _lhs("exam7-1"),
            2,
            {
                0: jq([2, 2, 2, 28, (3, 14)], [1, 1, 4, (4, 28), (12, 28)]),
                1: subst(jq([2, 14, (2, 14)], [1, 1, (1, 14)], 2), 2),
            },
        ),
        DissectionCase(
            "exam7-2-G",
            _lhs("exam7-2"),
            2,
            {
                0: subst(jq([2, 14, (6, 14)], [1, 1, (3, 14)], 2), 2),
                1: jq([2, 2, 2, 14, (5, 28), (9, 28)], [1, 1, 4, 28, (8, 28), (12, 28)]),
            },
        ),
        DissectionCase(
            "exam7-3-H",
            _lhs("exam7-3"),
            2,
            {
                0: jq([2, 2, 2, 14, (1, 28), (13, 28)], [1, 1, 4, 28, (4, 28), (8, 28)]),
                1: subst(jq([2, 14, (4, 14)], [1, 1, (5, 14)], 2, HALF), 2),
            },
        ),
        DissectionCase(
            "exam9-1-F",
            _lhs("exam9-1"),
            4,
            {
                0: subst(jq([2, (6, 14)], [1, 1], 2), 2),
                1: jq([2, 14, 14, 28, (2, 28), (6, 28)], [1, (1, 28), (4, 28), (7, 28), (12, 28), (13, 28)]),
                2: None,
                3: None,
            },
        ),
        DissectionCase(
            "exam9-2-G",
            _lhs("exam9-2"),
            4,
            {
                0: jq([2, 14, 14, 28, (6, 28), (10, 28)], [1, (3, 28), (7, 28), (8, 28), (11, 28), (12, 28)]),
                1: None,
                2: None,
                3: subst(jq([2, (4, 14)], [1, 1], 2), 2),
            },
        ),
        DissectionCase(
            "exam9-3-H",
            _lhs("exam9-3"),
            4,
            {
                0: jq([2, 14, 14, 28, (2, 28), (10, 28)], [1, (4, 28), (5, 28), (7, 28), (8, 28), (9, 28)]),
                1: None,
                2: None,
                3: subst(jq([2, (2, 14)], [1, 1], 2, HALF), 2),
            },
        ),
    ]
