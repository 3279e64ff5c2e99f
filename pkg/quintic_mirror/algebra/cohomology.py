"""Coefficient rings of the quintic: ℚ[P]/(P⁴) and its torus-equivariant
counterpart in fixed-point form.

``CohomClass`` holds c₀ + c₁P + c₂P² + c₃P³ over a scalar ring (rationals or
rational functions in ħ); P⁴ = 0 holds because no fourth slot exists.
``FixedPointClass`` holds the values of an equivariant class at the five fixed
points r_α of ℂP⁴, where P restricts to λ_α.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Callable, Sequence

from sympy import Rational as SympyRational

from quintic_mirror.algebra.rational import QQ, Rational, format_rational
from quintic_mirror.algebra.series import (
    HBAR_FUNCTIONS,
    RATIONALS,
    CoefficientRing,
)
from quintic_mirror.errors import (
    DegenerateWeightsError,
    NonUnitError,
    RingMismatchError,
    WeightParseError,
)

logger = logging.getLogger(__name__)

DIMENSION = 4
QUINTIC_DEGREE = 5
FIXED_POINTS = 5


@dataclass(frozen=True, eq=False)
class CohomClass:
    base: CoefficientRing
    c: tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.c) > DIMENSION:
            raise ValueError("ℚ[P]/(P^4) has exactly four coefficients")
        padded = tuple(self.base.coerce(x) for x in self.c) + (self.base.zero,) * (
            DIMENSION - len(self.c)
        )
        object.__setattr__(self, "c", padded)

    @classmethod
    def constant(cls, base: CoefficientRing, value: Any) -> CohomClass:
        return cls(base, (value,))

    @classmethod
    def hyperplane(cls, base: CoefficientRing) -> CohomClass:
        return cls(base, (base.zero, base.one))

    def __getitem__(self, power: int) -> Any:
        return self.c[power]

    def __bool__(self) -> bool:
        return any(bool(x) for x in self.c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, CohomClass):
            return self.c == other.c
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def _other(self, other: Any) -> CohomClass:
        if isinstance(other, CohomClass):
            if other.base != self.base:
                return COHOM_RINGS[self.base].coerce(other)
            return other
        return CohomClass.constant(self.base, other)

    def __add__(self, other: Any) -> CohomClass:
        other = self._other(other)
        return CohomClass(self.base, tuple(a + b for a, b in zip(self.c, other.c)))

    __radd__ = __add__

    def __neg__(self) -> CohomClass:
        return CohomClass(self.base, tuple(-a for a in self.c))

    def __sub__(self, other: Any) -> CohomClass:
        return self + (-self._other(other))

    def __mul__(self, other: Any) -> CohomClass:
        if not isinstance(other, CohomClass):
            scalar = self.base.coerce(other)
            return CohomClass(self.base, tuple(a * scalar for a in self.c))
        other = self._other(other)
        out = [self.base.zero] * DIMENSION
        for i, a in enumerate(self.c):
            if not a:
                continue
            for j in range(DIMENSION - i):
                if other.c[j]:
                    out[i + j] = out[i + j] + a * other.c[j]
        return CohomClass(self.base, tuple(out))

    __rmul__ = __mul__

    def map(self, func: Callable[[Any], Any], base: CoefficientRing | None = None) -> CohomClass:
        return CohomClass(base or self.base, tuple(func(x) for x in self.c))

    def __repr__(self) -> str:
        terms = [f"({x})*P^{k}" for k, x in enumerate(self.c) if x]
        return " + ".join(terms) or "0"


class CohomRing(CoefficientRing):
    """ℚ[P]/(P⁴) over ``base``, usable as a series coefficient ring."""

    def __init__(self, base: CoefficientRing) -> None:
        self.base = base
        self.name = f"{base.name}[P]/(P^4)"

    @property
    def zero(self) -> CohomClass:
        return CohomClass(self.base, ())

    @property
    def one(self) -> CohomClass:
        return CohomClass.constant(self.base, self.base.one)

    def coerce(self, value: Any) -> CohomClass:
        if isinstance(value, CohomClass):
            if value.base == self.base:
                return value
            if value.base == RATIONALS and self.base == HBAR_FUNCTIONS:
                return value.map(self.base.coerce, self.base)
            raise RingMismatchError(
                f"cannot use a class over {value.base} in {self.name}", ring=self.name
            )
        return CohomClass.constant(self.base, self.base.coerce(value))

    def inverse(self, value: Any) -> CohomClass:
        return invert_unit(self.coerce(value))

    def scale(self, value: Any, scalar: Rational) -> CohomClass:
        return value * scalar

    def __eq__(self, other: object) -> bool:
        return isinstance(other, CohomRing) and other.base == self.base

    def __hash__(self) -> int:
        return hash(("cohom", self.name))


COHOM_QQ = CohomRing(RATIONALS)
COHOM_HBAR = CohomRing(HBAR_FUNCTIONS)
COHOM_RINGS = {RATIONALS: COHOM_QQ, HBAR_FUNCTIONS: COHOM_HBAR}


def pair_nonequiv(phi: CohomClass, psi: CohomClass) -> Any:
    """⟨φ, ψ⟩ = ∫ 5P·φψ over ℂP⁴, i.e. 5 times the P³ coefficient of φψ."""
    return (phi * psi)[DIMENSION - 1] * QUINTIC_DEGREE


def invert_unit(phi: CohomClass) -> CohomClass:
    """Inverse by the finite geometric series in the nilpotent part."""
    lead = phi[0]
    if not lead:
        raise NonUnitError(phi, "invert_unit: scalar part is zero")
    lead_inverse = phi.base.inverse(lead)
    nilpotent = phi * lead_inverse - CohomClass.constant(phi.base, phi.base.one)
    term = CohomClass.constant(phi.base, phi.base.one)
    total = term
    for _ in range(DIMENSION - 1):
        term = -(term * nilpotent)
        total = total + term
    return total * lead_inverse


# equivariant side -------------------------------------------------------


@dataclass(frozen=True)
class WeightSpec:
    """Five distinct rational torus weights with λ₁ + … + λ₅ = 0."""

    lambdas: tuple[Rational, ...]

    def __post_init__(self) -> None:
        values = tuple(QQ.convert(x) for x in self.lambdas)
        object.__setattr__(self, "lambdas", values)
        if len(values) != FIXED_POINTS:
            raise DegenerateWeightsError(f"expected {FIXED_POINTS} weights, got {len(values)}")
        repeats = [
            (a + 1, b + 1)
            for a in range(FIXED_POINTS)
            for b in range(a + 1, FIXED_POINTS)
            if values[a] == values[b]
        ]
        if repeats:
            raise DegenerateWeightsError(
                f"weights must be distinct; repeated at index pairs {repeats}", pairs=repeats
            )
        if sum(values, QQ.zero):
            raise DegenerateWeightsError(
                f"weights must sum to zero, got {format_rational(sum(values, QQ.zero))}"
            )

    def __iter__(self):
        return iter(self.lambdas)

    def __getitem__(self, alpha: int) -> Rational:
        return self.lambdas[alpha]

    def permuted(self, order: Sequence[int]) -> WeightSpec:
        return WeightSpec(tuple(self.lambdas[i] for i in order))

    def scaled(self, factor: Any) -> WeightSpec:
        factor = QQ.convert(factor)
        return WeightSpec(tuple(x * factor for x in self.lambdas))

    def as_strings(self) -> list[str]:
        return [format_rational(x) for x in self.lambdas]

    def __str__(self) -> str:
        return ",".join(self.as_strings())


def parse_weights(text: str) -> WeightSpec:
    tokens = text.split(",")
    if len(tokens) != FIXED_POINTS:
        raise WeightParseError(
            min(len(tokens), FIXED_POINTS) + 1,
            text,
            f"expected {FIXED_POINTS} comma-separated rationals, got {len(tokens)}",
        )
    values = []
    for position, token in enumerate(tokens, start=1):
        stripped = token.strip()
        if not stripped:
            raise WeightParseError(position, token, "empty entry")
        try:
            parsed = SympyRational(stripped)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise WeightParseError(position, token, str(exc) or "not a rational") from exc
        values.append(QQ.from_sympy(parsed))
    spec = WeightSpec(tuple(values))
    logger.debug("torus weights %s", spec)
    return spec


def euler_weights(w: WeightSpec) -> tuple[Rational, ...]:
    """e_α = Π_{β≠α} (λ_α − λ_β)."""
    out = []
    for alpha, lam in enumerate(w):
        e = QQ.one
        for beta, other in enumerate(w):
            if beta != alpha:
                e *= lam - other
        out.append(e)
    return tuple(out)


@dataclass(frozen=True, eq=False)
class FixedPointClass:
    base: CoefficientRing
    v: tuple[Any, ...]

    def __post_init__(self) -> None:
        if len(self.v) != FIXED_POINTS:
            raise ValueError(f"a fixed-point class has exactly {FIXED_POINTS} values")
        object.__setattr__(self, "v", tuple(self.base.coerce(x) for x in self.v))

    def __getitem__(self, alpha: int) -> Any:
        return self.v[alpha]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FixedPointClass):
            return self.v == other.v
        return NotImplemented

    __hash__ = None  # type: ignore[assignment]

    def __add__(self, other: FixedPointClass) -> FixedPointClass:
        return FixedPointClass(self.base, tuple(a + b for a, b in zip(self.v, other.v)))

    def __mul__(self, other: Any) -> FixedPointClass:
        if isinstance(other, FixedPointClass):
            return FixedPointClass(self.base, tuple(a * b for a, b in zip(self.v, other.v)))
        scalar = self.base.coerce(other)
        return FixedPointClass(self.base, tuple(a * scalar for a in self.v))


def to_fixed_point(phi: CohomClass, w: WeightSpec) -> FixedPointClass:
    values = []
    for lam in w:
        acc = phi.base.zero
        power = phi.base.one
        for coeff in phi.c:
            acc = acc + coeff * power
            power = power * phi.base.coerce(lam)
        values.append(acc)
    return FixedPointClass(phi.base, tuple(values))


def pair_equiv(phi: FixedPointClass, psi: FixedPointClass, w: WeightSpec) -> Any:
    """Localization form of ∫ 5P·φψ: Σ_α 5λ_α φ(λ_α) ψ(λ_α) / e_α."""
    total = phi.base.zero
    for lam, e, a, b in zip(w, euler_weights(w), phi.v, psi.v):
        total = total + a * b * (QUINTIC_DEGREE * lam / e)
    return total
