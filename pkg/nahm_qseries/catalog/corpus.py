"""The built-in identity corpus."""
from __future__ import annotations

from fractions import Fraction

from cachetools import LRUCache, cached

from ..models import NahmTriple
from .expr import Identity
from .families import (
    add,
    andrews_gordon,
    cao_wang,
    durfee,
    hyper,
    jq,
    lebesgue,
    lee,
    mono,
    multi,
    nahm,
    pf,
    poch,
    prod,
    subst,
    two_parameter_family,
    tpl,
    vz_double,
    warnaar,
    zagier_signed_theta,
    zagier_theta,
)

F = Fraction
HALF = F(1, 2)

PROVED = "proved-in-paper"
CONJECTURAL = "conjectural-in-paper"

VZ_TRIPLES = [
    (HALF, 0, F(-1, 40)),
    (HALF, HALF, F(1, 40)),
    (1, 0, F(-1, 48)),
    (1, HALF, F(1, 24)),
    (1, -HALF, F(1, 24)),
    (2, 0, F(-1, 60)),
    (2, 1, F(11, 60)),
]

TWO_PARAMETER_GRID = [(a, n) for a in (1, F(3, 2), 2, 3) for n in (0, HALF, 1)]


def _rogers_ramanujan() -> list[Identity]:
    return [
        Identity("RR-1", nahm([[2]], [0]), jq([5], [(1, 5)]), provenance="Rogers-Ramanujan, first identity"),
        Identity("RR-2", nahm([[2]], [1]), jq([5], [(2, 5)]), provenance="Rogers-Ramanujan, second identity"),
    ]


def _slater() -> list[Identity]:
    q_q = tpl(1, 1, power=-1)
    entries = [
        ("S.59", hyper(2, 2, [tpl(-1, 1), tpl(1, 1, l=2, s=1, power=-1)]), jq([(2, 14)], [1])),
        ("S.60", hyper(2, 1, [tpl(-1, 1), tpl(1, 1, l=2, s=1, power=-1)]), jq([(4, 14)], [1])),
        ("S.61", hyper(2, 0, [tpl(-1, 1), tpl(1, 1, l=2, power=-1)]), jq([(6, 14)], [1])),
        (
            "S.19",
            hyper(6, 0, [tpl(-1, 1, 2, power=-1), tpl(1, 4, 4, power=-1)], alternating=True),
            jq([(2, 5)], [2]),
        ),
        ("S.31", hyper(4, 2, [tpl(1, 1, 2, s=1), tpl(1, 2, 2, l=2, s=1, power=-1)]), jq([(1, 7)], [2])),
        (
            "S.31-alt",
            hyper(4, 2, [tpl(-1, 1, 2, s=1, power=-1), tpl(1, 4, 4, power=-1)]),
            jq([(1, 7)], [2]),
        ),
        ("S.32", hyper(4, 2, [tpl(1, 1, 2), tpl(1, 2, 2, l=2, power=-1)]), jq([(2, 7)], [2])),
        (
            "S.32-alt",
            hyper(4, 2, [tpl(1, 2, 2, power=-1), tpl(-1, 1, 1, l=2, power=-1)]),
            jq([(2, 7)], [2]),
        ),
        ("S.33", hyper(4, 0, [tpl(1, 1, 2), tpl(1, 2, 2, l=2, power=-1)]), jq([(3, 7)], [2])),
        (
            "S.33-alt",
            hyper(4, 0, [tpl(1, 2, 2, power=-1), tpl(-1, 1, 1, l=2, power=-1)]),
            jq([(3, 7)], [2]),
        ),
        ("S.34", hyper(2, 2, [tpl(-1, 1, 2), tpl(1, 2, 2, power=-1)]), jq([8, 8], [4, (3, 8)])),
        ("S.36", hyper(2, 0, [tpl(-1, 1, 2), tpl(1, 2, 2, power=-1)]), jq([8, 8], [4, (1, 8)])),
        (
            "S.38",
            hyper(4, 2, [tpl(1, 1, l=2, s=1, power=-1)]),
            poch(pf(-1, 1, 8), pf(-1, 7, 8), pf(1, 8, 8), pf(1, 2, 2, -1)),
        ),
        (
            "S.39",
            hyper(4, 0, [tpl(1, 1, l=2, power=-1)]),
            poch(pf(-1, 3, 8), pf(-1, 5, 8), pf(1, 8, 8), pf(1, 2, 2, -1)),
        ),
        ("S.44", hyper(3, F(3, 2), [q_q, tpl(1, 1, 2, s=1, power=-1)]), jq([(2, 10)], [1])),
        ("S.46", hyper(3, -HALF, [q_q, tpl(1, 1, 2, power=-1)]), jq([(4, 10)], [1])),
        (
            "S.80",
            hyper(1, HALF, [tpl(-1, 1), tpl(1, 1, l=2, s=1, power=-1)]),
            jq([2, 14, 14, 14], [1, (1, 14), (4, 14), (6, 14)]),
        ),
        (
            "S.80-alt",
            hyper(1, HALF, [q_q, tpl(1, 1, 2, s=1, power=-1)]),
            jq([2, 14, 14, 14], [1, (1, 14), (4, 14), (6, 14)]),
        ),
        (
            "S.81",
            hyper(1, HALF, [tpl(-1, 1), tpl(1, 1, l=2, power=-1)]),
            jq([2, 14, 14, 14], [1, (2, 14), (3, 14), (4, 14)]),
        ),
        (
            "S.81-alt",
            hyper(1, HALF, [q_q, tpl(1, 1, 2, power=-1)]),
            jq([2, 14, 14, 14], [1, (2, 14), (3, 14), (4, 14)]),
        ),
        (
            "S.82",
            hyper(1, F(3, 2), [tpl(-1, 1), tpl(1, 1, l=2, s=1, power=-1)]),
            jq([2, 14, 14, 14], [1, (2, 14), (5, 14), (6, 14)]),
        ),
        (
            "S.82-alt",
            hyper(1, F(3, 2), [q_q, tpl(1, 1, 2, s=1, power=-1)]),
            jq([2, 14, 14, 14], [1, (2, 14), (5, 14), (6, 14)]),
        ),
        (
            "S.97",
            hyper(6, 2, [tpl(-1, 1, 2, s=1), tpl(1, 2, 2, l=2, s=1, power=-1)]),
            jq([2, (3, 10), (4, 20)], [1, 4, 20]),
        ),
        (
            "S.117",
            hyper(2, 0, [tpl(-1, 1, 2), tpl(1, 2, 2, l=2, power=-1)]),
            jq([2, 14, (3, 28), (11, 28)], [1, 28, (4, 28), (12, 28)]),
        ),
        (
            "S.117-alt",
            hyper(2, 0, [tpl(1, 1, 2, power=-1), tpl(1, 4, 4, power=-1)]),
            jq([2, 14, (3, 28), (11, 28)], [1, 28, (4, 28), (12, 28)]),
        ),
        (
            "S.118",
            hyper(2, 2, [tpl(-1, 1, 2), tpl(1, 2, 2, l=2, power=-1)]),
            jq([2, (1, 14), (12, 28)], [1, 4, 28]),
        ),
        (
            "S.118-alt",
            hyper(2, 2, [tpl(1, 1, 2, power=-1), tpl(1, 4, 4, power=-1)]),
            jq([2, (1, 14), (12, 28)], [1, 4, 28]),
        ),
        (
            "S.119",
            hyper(2, 2, [tpl(-1, 1, 2, s=1), tpl(1, 2, 2, l=2, s=1, power=-1)]),
            jq([2, (4, 28), (5, 14)], [1, 4, 28]),
        ),
        (
            "S.119-alt",
            hyper(2, 2, [tpl(1, 1, 2, s=1, power=-1), tpl(1, 4, 4, power=-1)]),
            jq([2, (4, 28), (5, 14)], [1, 4, 28]),
        ),
    ]
    identities = []
    for identity_id, lhs, rhs in entries:
        number = identity_id.split("-")[0]
        note = "second sum-side form" if identity_id.endswith("-alt") else ""
        identities.append(Identity(identity_id, lhs, rhs, provenance=f"Slater's list, {number}", note=note))
    return identities


def _example_2() -> list[Identity]:
    A = [[2, 1], [1, 1]]
    rows = [
        ("exam2-1", [-1, HALF], 1, jq([4], [1], 2), F(1, 8)),
        ("exam2-2", [0, 0], 2, jq([8, 8], [4, (1, 8)]), F(-1, 32)),
        ("exam2-3", [0, HALF], 1, jq([2, 2, 2], [1, 1, 4]), F(0)),
        ("exam2-4", [1, HALF], 1, jq([4], [1]), F(1, 8)),
        ("exam2-5", [1, 1], 2, jq([8, 8], [4, (3, 8)]), F(7, 32)),
    ]
    return [
        Identity(i, subst(nahm(A, B), k), rhs, PROVED, "rank-2 family, matrix [[2,1],[1,1]]", C=C, q_scale=k)
        for i, B, k, rhs, C in rows
    ]


def _example_3() -> list[Identity]:
    A = [[1, -1], [-1, 2]]
    rows = [
        ("exam3-1", [F(-3, 2), 2], 1, jq([2, 2, 2, 2], [1, 1, 1, 4], 2, -1), F(25, 24)),
        ("exam3-2", [0, 0], 2, jq([2, 2, 2, (3, 8)], [1, 1, 4, 4]), F(-5, 96)),
        ("exam3-3", [-HALF, 1], 1, jq([2, 4], [1, 1], 2), F(1, 6)),
        ("exam3-4", [HALF, 0], 1, jq([2, 2, 2, 2], [1, 1, 1, 4]), F(1, 24)),
        ("exam3-5", [0, 1], 2, jq([2, 2, 2, (1, 8)], [1, 1, 4, 4]), F(19, 96)),
    ]
    return [
        Identity(
            i,
            subst(nahm(A, B), k),
            rhs,
            PROVED,
            "rank-2 family, matrix [[1,-1],[-1,2]]",
            note="C taken as 19/96; Zagier's table lists 19/24" if i == "exam3-5" else "",
            C=C,
            q_scale=k,
        )
        for i, B, k, rhs, C in rows
    ]


def _example_4() -> list[Identity]:
    A = [[4, 1], [1, 1]]
    return [
        Identity("exam4-1", nahm(A, [0, HALF]), jq([(4, 10)], [1]), PROVED, "rank-2 family, matrix [[4,1],[1,1]]", C=F(1, 120)),
        Identity("exam4-2", nahm(A, [2, HALF]), jq([(2, 10)], [1]), PROVED, "rank-2 family, matrix [[4,1],[1,1]]", C=F(49, 120)),
        zagier_signed_theta("zagier-exam4-1", [0, HALF], F(1, 120), F(3, 5)),
        zagier_signed_theta("zagier-exam4-2", [2, HALF], F(49, 120), F(4, 5)),
    ]


def _example_5() -> list[Identity]:
    A = [[F(1, 3), F(-1, 3)], [F(-1, 3), F(4, 3)]]
    first = add(
        jq([6, 45, (18, 90), (27, 90)], [3, 3, 90, 90], 3),
        jq([10, (1, 30), (4, 30), (5, 30), (6, 30), (11, 30), (14, 30)], [3, 30, 30, 30, 30, 30, (3, 30)], -1),
    )
    second = add(
        jq([10, (2, 30), (5, 30), (7, 30), (8, 30), (12, 30), (13, 30)], [3, 30, 30, 30, 30, 30, (9, 30)]),
        jq([6, 45, (9, 90), (36, 90)], [3, 3, 90, 90], 3, 2),
    )
    provenance = "rank-2 family, matrix [[1/3,-1/3],[-1/3,4/3]] in q^3"
    return [
        Identity("exam5-1", subst(nahm(A, [F(-1, 6), F(2, 3)]), 3), first, CONJECTURAL, provenance, C=F(3, 40), q_scale=3),
        Identity("exam5-2", subst(nahm(A, [HALF, 0]), 3), second, CONJECTURAL, provenance, C=F(1, 120), q_scale=3),
    ]


def _example_6() -> list[Identity]:
    A = [[4, 2], [2, 2]]
    rows = [
        ("exam6-1", [0, 0], jq([(3, 7)], [1]), F(-1, 42)),
        ("exam6-2", [1, 0], jq([(2, 7)], [1]), F(5, 42)),
        ("exam6-3", [2, 1], jq([(1, 7)], [1]), F(17, 42)),
    ]
    return [
        Identity(i, nahm(A, B), rhs, PROVED, "rank-2 family, matrix [[4,2],[2,2]]", C=C)
        for i, B, rhs, C in rows
    ]


def _example_7() -> list[Identity]:
    A = [[HALF, -HALF], [-HALF, 1]]
    rows = [
        (
            "exam7-1",
            [0, 0],
            add(
                jq([4, 4, 4, 56, (6, 28)], [2, 2, 8, (8, 56), (24, 56)]),
                jq([8, 56, (8, 56)], [4, 4, (4, 56)], 2, 1),
            ),
            F(-5, 84),
        ),
        (
            "exam7-2",
            [HALF, -HALF],
            add(
                jq([8, 56, (24, 56)], [4, 4, (12, 56)], 2),
                jq([4, 4, 4, 28, (10, 56), (18, 56)], [2, 2, 8, 56, (16, 56), (24, 56)], 1, 1),
            ),
            F(1, 21),
        ),
        (
            "exam7-3",
            [HALF, 0],
            add(
                jq([4, 4, 4, 28, (2, 56), (26, 56)], [2, 2, 8, 56, (8, 56), (16, 56)]),
                jq([8, 56, (16, 56)], [4, 4, (20, 56)], 2, 3),
            ),
            F(1, 84),
        ),
    ]
    return [
        Identity(i, subst(nahm(A, B), 4), rhs, PROVED, "rank-2 family, matrix [[1/2,-1/2],[-1/2,1]] in q^4", C=C, q_scale=4)
        for i, B, rhs, C in rows
    ]


def _example_8() -> list[Identity]:
    A = [[F(3, 2), 1], [1, 2]]
    Q = [[2, 4], [4, 8]]
    rows = [
        ("exam8-1", [-HALF, 0], [0, 4], jq([14, 28, 28, (2, 28)], [(1, 28), (4, 28), (8, 28), (13, 28)]), F(1, 168)),
        ("exam8-2", [0, 0], [2, 0], jq([14, 28, 28, (6, 28)], [(3, 28), (4, 28), (11, 28), (12, 28)]), F(-5, 168)),
        ("exam8-3", [HALF, 1], [4, 4], jq([14, 28, 28, (10, 28)], [(5, 28), (8, 28), (9, 28), (12, 28)]), F(5, 21)),
    ]
    provenance = "rank-2 family, matrix [[3/2,1],[1,2]] in q^4"
    identities = []
    for i, B, L, rhs, C in rows:
        note = "C taken as 5/21; Zagier's table lists 25/168" if i == "exam8-3" else ""
        lhs = subst(nahm(A, B), 4)
        identities.append(Identity(i, lhs, rhs, PROVED, provenance, note, C=C, q_scale=4))
        identities.append(
            Identity(f"{i}-middle", lhs, multi(Q, L, 0, [4, 8]), PROVED, provenance, "middle member")
        )
    return identities


def _example_8_components() -> list[Identity]:
    plus_odd_sq = pf(-1, 1, 2, 2)
    minus_odd_sq = pf(1, 1, 2, 2)
    rows = [
        (
            "new-exam8-1-R1-result",
            prod(poch(plus_odd_sq, pf(1, 4, 8, -1)), hyper(4, 2, [tpl(1, 4, 4, power=-1), tpl(1, 4, 8, power=-1)])),
            jq([2, 2, 2, 2, 8, 56, (24, 56)], [1, 1, 4, 4, 4, 4, (12, 56)]),
        ),
        (
            "new-exam8-1-R2-result",
            prod(
                mono(-HALF),
                poch(plus_odd_sq, pf(1, 2, 4, -1), pf(-1, 4, 4, -1)),
                hyper(4, 4, [tpl(1, 2, 4, s=1, power=-1), tpl(1, 8, 8, power=-1)], gamma=1),
            ),
            jq([2, 2, 4, (8, 56), (10, 28)], [1, 1, 8, 8, 56], -HALF, 1),
        ),
        (
            "new-exam8-1-R3-result",
            prod(
                mono(-HALF),
                poch(minus_odd_sq, pf(-1, 2, 2, -1)),
                hyper(4, 4, [tpl(-1, 2, 4, s=1, power=-1), tpl(1, 8, 8, power=-1)], alternating=True, gamma=1),
            ),
            jq([1, 1, 14, (2, 28), (6, 28)], [2, 4, 28, (4, 28), (12, 28)], -HALF, 1),
        ),
        (
            "new-exam8-2-S1-result",
            prod(
                mono(HALF),
                poch(plus_odd_sq, pf(1, 2, 4, -1), pf(-1, 4, 4, -1)),
                hyper(4, 4, [tpl(1, 2, 4, power=-1), tpl(1, 8, 8, power=-1)]),
            ),
            jq([2, 2, 4, 28, (2, 56), (26, 56)], [1, 1, 8, 56, (8, 56), (16, 56)], HALF),
        ),
        (
            "new-exam8-2-S2-result",
            prod(
                mono(HALF),
                poch(minus_odd_sq, pf(-1, 2, 2, -1)),
                hyper(4, 4, [tpl(-1, 2, 4, power=-1), tpl(1, 8, 8, power=-1)], alternating=True),
            ),
            jq([1, 1, 14, (6, 28), (10, 28)], [2, 4, 28, (8, 28), (12, 28)], HALF),
        ),
        (
            "new-exam8-2-S3-result",
            prod(
                mono(-1),
                poch(plus_odd_sq, pf(1, 4, 8, -1)),
                hyper(4, 6, [tpl(1, 4, 4, power=-1), tpl(1, 4, 8, s=1, power=-1)], gamma=3),
            ),
            jq([2, 2, 2, 2, 8, 8, 56, 56, 56], [1, 1, 4, 4, 4, 4, (8, 56), (20, 56), (24, 56)], -1, 3),
        ),
        (
            "new-exam8-3-T1-result",
            prod(
                mono(-1),
                poch(plus_odd_sq, pf(1, 4, 8, -1)),
                hyper(4, 2, [tpl(1, 4, 4, power=-1), tpl(1, 4, 8, s=1, power=-1)]),
            ),
            jq([2, 2, 2, 2, 8, 8, 56, 56, 56], [1, 1, 4, 4, 4, 4, (4, 56), (16, 56), (24, 56)], -1),
        ),
        (
            "new-exam8-3-T2-result",
            prod(
                mono(HALF),
                poch(plus_odd_sq, pf(1, 2, 4, -1), pf(-1, 4, 4, -1)),
                hyper(4, 0, [tpl(1, 2, 4, power=-1), tpl(1, 8, 8, power=-1)], gamma=-1),
            ),
            jq([2, 2, 4, 28, (6, 56), (22, 56)], [1, 1, 8, 56, (8, 56), (24, 56)], HALF, -1),
        ),
        (
            "new-exam8-3-T3-result",
            prod(
                mono(-HALF),
                poch(minus_odd_sq, pf(-1, 2, 2, -1)),
                hyper(4, 0, [tpl(-1, 2, 4, power=-1), tpl(1, 8, 8, power=-1)], alternating=True, gamma=-1),
            ),
            jq([1, 1, 2, 14, (2, 28), (10, 28)], [2, 2, 4, 28, (4, 28), (8, 28)], -HALF, -1),
        ),
    ]
    return [
        Identity(i, lhs, rhs, "auxiliary", "component of the second proof for matrix [[3/2,1],[1,2]]")
        for i, lhs, rhs in rows
    ]


def _example_9() -> list[Identity]:
    A = [[1, -HALF], [-HALF, F(3, 4)]]
    rows = [
        (
            "exam9-1",
            [-HALF, F(1, 4)],
            add(
                jq([16, (48, 112)], [8, 8], 2),
                jq([8, 56, 56, 112, (8, 112), (24, 112)], [4, (4, 112), (16, 112), (28, 112), (48, 112), (52, 112)], 1, 1),
            ),
            F(1, 28),
        ),
        (
            "exam9-2",
            [0, 0],
            add(
                jq([8, 56, 56, 112, (24, 112), (40, 112)], [4, (12, 112), (28, 112), (32, 112), (44, 112), (48, 112)]),
                jq([16, (32, 112)], [8, 8], 2, 3),
            ),
            F(-3, 56),
        ),
        (
            "exam9-3",
            [0, HALF],
            add(
                jq([8, 56, 56, 112, (8, 112), (40, 112)], [4, (16, 112), (20, 112), (28, 112), (32, 112), (36, 112)]),
                jq([16, (16, 112)], [8, 8], 2, 7),
            ),
            F(1, 56),
        ),
    ]
    return [
        Identity(i, subst(nahm(A, B), 8), rhs, PROVED, "rank-2 family, matrix [[1,-1/2],[-1/2,3/4]] in q^8", C=C, q_scale=8)
        for i, B, rhs, C in rows
    ]


def _conjecture_10() -> list[Identity]:
    A = [[F(4, 3), F(2, 3)], [F(2, 3), F(4, 3)]]
    first = subst(nahm(A, [F(-2, 3), F(-1, 3)]), 3)
    second = subst(nahm(A, [0, 0]), 3)
    provenance = "rank-2 family, matrix [[4/3,2/3],[2/3,4/3]] in q^3"
    return [
        Identity(
            "conj-10-1",
            first,
            add(jq([(18, 45)], [3], 2), jq([(12, 45)], [3], 1, 1), jq([(3, 45)], [3], 1, 4)),
            CONJECTURAL,
            provenance,
            C=F(1, 30),
            q_scale=3,
        ),
        Identity(
            "conj-10-2",
            second,
            add(jq([(21, 45)], [3]), jq([(6, 45)], [3], -1, 3), jq([(9, 45)], [3], 2, 2)),
            CONJECTURAL,
            provenance,
            C=F(-1, 30),
            q_scale=3,
        ),
        Identity(
            "conj-10-1-Wang",
            first,
            add(jq([(18, 45)], [3], 3), jq([5, (1, 15), (4, 15)], [15, 15, (3, 15)], -1)),
            CONJECTURAL,
            provenance,
            "Wang's two-term form",
            C=F(1, 30),
            q_scale=3,
        ),
        Identity(
            "conj-10-2-Wang",
            second,
            add(jq([5, (2, 15), (7, 15)], [15, 15, (6, 15)]), jq([(9, 45)], [3], 3, 2)),
            CONJECTURAL,
            provenance,
            "Wang's two-term form",
            C=F(-1, 30),
            q_scale=3,
        ),
    ]


def _example_11() -> list[Identity]:
    A = [[1, -HALF], [-HALF, 1]]
    rows = [
        (
            "exam11-1",
            [-HALF, 0],
            add(
                jq([4, (8, 20)], [2, 2], 2),
                jq([2, 2, 10, 20, 20, 20], [1, 4, (1, 20), (5, 20), (8, 20), (9, 20)]),
            ),
            F(1, 20),
        ),
        (
            "exam11-2",
            [0, 0],
            add(
                jq([2, 2, 10, 20, 20, 20], [1, 4, (3, 20), (4, 20), (5, 20), (7, 20)]),
                jq([4, (4, 20)], [2, 2], 2, 1),
            ),
            F(-1, 20),
        ),
    ]
    return [
        Identity(i, subst(nahm(A, B), 2), rhs, PROVED, "rank-2 family, matrix [[1,-1/2],[-1/2,1]] in q^2", C=C, q_scale=2)
        for i, B, rhs, C in rows
    ]


def _families() -> list[Identity]:
    identities = [lebesgue(e) for e in (0, 1, -1, -2)]
    identities += [durfee(n) for n in range(-5, 6)]
    identities += [cao_wang(a, e) for a, e in ((0, HALF), (1, 0), (1, HALF), (2, 1), (HALF, F(1, 4)))]
    identities += [lee(e) for e in (0, -1, -2)]
    identities += [warnaar(k) for k in (2, 3, 4)]
    identities += [two_parameter_family(a, n) for a, n in TWO_PARAMETER_GRID]
    identities += [
        zagier_theta(a, n) for a, n in ((1, 0), (1, HALF), (F(3, 2), F(1, 3)), (2, F(1, 4)))
    ]
    identities += [andrews_gordon(k, s) for k in range(2, 6) for s in range(1, k + 1)]
    identities += [vz_double(NahmTriple([[a]], [b], c))[1] for a, b, c in VZ_TRIPLES]
    return identities


@cached(cache=LRUCache(maxsize=1))
def builtin_corpus() -> tuple[Identity, ...]:
    identities = (
        _rogers_ramanujan()
        + _slater()
        + _example_2()
        + _example_3()
        + _example_4()
        + _example_5()
        + _example_6()
        + _example_7()
        + _example_8()
        + _example_8_components()
        + _example_9()
        + _conjecture_10()
        + _example_11()
        + _families()
    )
    return tuple(sorted(identities, key=lambda identity: identity.id))


def corpus_index(identities: tuple[Identity, ...] | None = None) -> dict[str, Identity]:
    return {identity.id: identity for identity in (identities or builtin_corpus())}


__all__ = ["builtin_corpus", "corpus_index"]
