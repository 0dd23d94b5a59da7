from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Literal, Sequence

from .errors import ModularityError, NahmError, ProductError
from .linalg import is_positive_definite

Rational = int | Fraction
Status = Literal["proved-in-paper", "conjectural-in-paper", "auxiliary"]


def as_rational(value: Rational | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    return Fraction(value)


def _matrix(rows: Sequence[Sequence[Rational | str]]) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(as_rational(x) for x in row) for row in rows)


def _vector(items: Sequence[Rational | str]) -> tuple[Fraction, ...]:
    return tuple(as_rational(x) for x in items)


@dataclass(frozen=True, slots=True)
class Monomial:
    coeff: Fraction = Fraction(1)
    exp: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeff", as_rational(self.coeff))
        object.__setattr__(self, "exp", as_rational(self.exp))

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self.coeff * other.coeff, self.exp + other.exp)

    def __pow__(self, n: int) -> Monomial:
        return Monomial(self.coeff**n, self.exp * n)


@dataclass(frozen=True, slots=True)
class PochFactor:
    """(a; q^base)_length raised to power; length None means infinite."""

    a: Monomial
    base: Fraction = Fraction(1)
    length: int | None = None
    power: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_rational(self.base))
        if self.base <= 0:
            raise ProductError(f"Pochhammer base must be positive, got {self.base}")
        if self.length is not None and self.length < 0:
            raise ProductError(f"negative Pochhammer length {self.length}")
        if self.power == 0:
            raise ProductError("Pochhammer power must be nonzero")


@dataclass(frozen=True, slots=True)
class JSpec:
    """J_m when residue is None, otherwise J_{residue,m}."""

    modulus: int
    residue: int | None = None
    power: int = 1

    def __post_init__(self) -> None:
        if self.modulus <= 0:
            raise ProductError(f"J modulus must be positive, got {self.modulus}")
        if self.residue is not None and not 0 < self.residue < self.modulus:
            raise ProductError(
                f"J residue must satisfy 0 < a < m, got a={self.residue}, m={self.modulus}"
            )
        if self.power == 0:
            raise ProductError("J power must be nonzero")

    def scaled(self, k: int) -> JSpec:
        residue = None if self.residue is None else self.residue * k
        return JSpec(self.modulus * k, residue, self.power)


@dataclass(frozen=True, slots=True)
class NahmTriple:
    A: tuple[tuple[Fraction, ...], ...]
    B: tuple[Fraction, ...]
    C: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "A", _matrix(self.A))
        object.__setattr__(self, "B", _vector(self.B))
        object.__setattr__(self, "C", as_rational(self.C))
        _check_shape(self.A, self.B)

    @property
    def rank(self) -> int:
        return len(self.B)

    def is_definite(self) -> bool:
        return is_positive_definite(self.A)

    def as_multi_sum(self) -> MultiSum:
        return MultiSum(self.A, self.B, self.C)


@dataclass(frozen=True, slots=True)
class MultiSum:
    """Sum of q^{n^T Q n/2 + n^T L + c} / prod (q^{d_i}; q^{d_i})_{n_i}."""

    Q: tuple[tuple[Fraction, ...], ...]
    L: tuple[Fraction, ...]
    c: Fraction = Fraction(0)
    d: tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "Q", _matrix(self.Q))
        object.__setattr__(self, "L", _vector(self.L))
        object.__setattr__(self, "c", as_rational(self.c))
        d = _vector(self.d) if self.d else tuple(Fraction(1) for _ in self.L)
        object.__setattr__(self, "d", d)
        _check_shape(self.Q, self.L)
        if len(d) != len(self.L):
            raise NahmError("one denominator modulus is required per summation index")
        if any(x <= 0 for x in d):
            raise NahmError("denominator moduli must be positive")

    @property
    def rank(self) -> int:
        return len(self.L)


def _check_shape(matrix: tuple[tuple[Fraction, ...], ...], vector: tuple[Fraction, ...]) -> None:
    size = len(vector)
    if len(matrix) != size or any(len(row) != size for row in matrix):
        raise NahmError(f"expected a {size}x{size} matrix")
    for i in range(size):
        for j in range(i):
            if matrix[i][j] != matrix[j][i]:
                raise NahmError("quadratic form matrix must be symmetric")


@dataclass(frozen=True, slots=True)
class PochTemplate:
    """(a; q^base)_{l*n + s} in the n-th term, numerator when power is 1."""

    a: Monomial
    base: Fraction = Fraction(1)
    l: int = 1
    s: int = 0
    power: int = 1

    def __post_init__(self) -> None:
        object.__setattr__(self, "base", as_rational(self.base))
        if self.l not in (0, 1, 2) or self.s not in (0, 1):
            raise NahmError(f"unsupported length template {self.l}n+{self.s}")
        if self.power not in (1, -1):
            raise NahmError("template power must be +1 or -1")
        if self.base <= 0:
            raise NahmError("template base must be positive")

    def at(self, n: int) -> PochFactor:
        return PochFactor(self.a, self.base, self.l * n + self.s, self.power)


@dataclass(frozen=True, slots=True)
class HyperSum:
    """Sum over n >= 0 of (+-1)^n z^n q^{alpha n^2/2 + beta n + gamma} prod templates."""

    alpha: Fraction
    beta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    z: Monomial = field(default_factory=Monomial)
    alternating: bool = False
    factors: tuple[PochTemplate, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        object.__setattr__(self, "beta", as_rational(self.beta))
        object.__setattr__(self, "gamma", as_rational(self.gamma))
        object.__setattr__(self, "factors", tuple(self.factors))

    def terminates(self) -> bool:
        if self.alpha > 0:
            return True
        return self.alpha == 0 and self.beta + self.z.exp > 0


@dataclass(frozen=True, slots=True)
class GEtaFactor:
    delta: int
    g: int
    r: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", as_rational(self.r))
        if not 0 < self.g < self.delta:
            raise ModularityError(f"need 0 < g < delta, got g={self.g}, delta={self.delta}")
        if self.r.denominator != 1:
            if 2 * self.g != self.delta or self.r.denominator != 2:
                raise ModularityError(
                    f"exponent {self.r} on eta_({self.delta};{self.g}) must be integral"
                )


@dataclass(frozen=True, slots=True)
class GEtaList:
    level: int
    factors: tuple[GEtaFactor, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", tuple(self.factors))
        if self.level <= 0:
            raise ModularityError("level must be positive")
        for f in self.factors:
            if self.level % f.delta:
                raise ModularityError(f"delta={f.delta} does not divide level {self.level}")


@dataclass(frozen=True, slots=True)
class ModularityReport:
    valinf: Fraction
    val0: Fraction
    is_modular: bool


@dataclass(frozen=True, slots=True)
class ScalingResult:
    k: int
    n0: int
    level: int


@dataclass(slots=True)
class FitResult:
    scalar: Fraction
    q_power: Fraction
    exponents: dict[int, int]
    modulus: int
    jquot_form: tuple[JSpec, ...] | None = None
    stable_from: int = 1
