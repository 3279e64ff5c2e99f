"""Truncated formal power series in q (and optionally z) over a coefficient ring.

Series are immutable. The truncation orders are part of the value and every
binary operation keeps the smaller bound, so precision never silently grows.
A pure q-series carries ``z_order=None``: it has no z-dependence and combines
with a (q, z)-series by adopting the other operand's z bound.
"""
from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Iterator, Mapping

from sympy.polys.fields import FracElement
from sympy.polys.rings import PolyElement

from quintic_mirror.algebra.rational import HBAR_FIELD, QQ, Rational, as_ratfunc
from quintic_mirror.errors import (
    InvalidSubstitutionError,
    NonUnitError,
    RingMismatchError,
)

Exponent = tuple[int, int]


class CoefficientRing(ABC):
    name: str

    @property
    @abstractmethod
    def zero(self) -> Any: ...

    @property
    @abstractmethod
    def one(self) -> Any: ...

    @abstractmethod
    def coerce(self, value: Any) -> Any:
        """Map ``value`` into this ring or raise RingMismatchError."""

    @abstractmethod
    def inverse(self, value: Any) -> Any: ...

    def scale(self, value: Any, scalar: Rational) -> Any:
        return value * scalar

    def __repr__(self) -> str:
        return self.name


class _Rationals(CoefficientRing):
    name = "QQ"
    zero = QQ.zero
    one = QQ.one

    def coerce(self, value: Any) -> Any:
        if isinstance(value, (PolyElement, FracElement)) or not _is_scalar(value):
            raise RingMismatchError(
                f"cannot use {type(value).__name__} as a coefficient in {self.name}",
                ring=self.name,
            )
        return QQ.convert(value)

    def inverse(self, value: Any) -> Any:
        if not value:
            raise NonUnitError(value, self.name)
        return QQ.one / value


class _HbarFunctions(CoefficientRing):
    name = "QQ(hbar)"
    zero = HBAR_FIELD.zero
    one = HBAR_FIELD.one

    def coerce(self, value: Any) -> Any:
        if isinstance(value, FracElement):
            if value.field != HBAR_FIELD:
                raise RingMismatchError("foreign rational-function field", ring=self.name)
            return value
        if isinstance(value, PolyElement) or _is_scalar(value):
            return as_ratfunc(value)
        raise RingMismatchError(
            f"cannot use {type(value).__name__} as a coefficient in {self.name}",
            ring=self.name,
        )

    def inverse(self, value: Any) -> Any:
        if not value:
            raise NonUnitError(value, self.name)
        return HBAR_FIELD.one / value


def _is_scalar(value: Any) -> bool:
    if isinstance(value, (bool,)):
        return False
    if isinstance(value, int):
        return True
    try:
        QQ.convert(value)
    except Exception:  # sympy raises CoercionFailed or TypeError depending on input
        return False
    return True


RATIONALS = _Rationals()
HBAR_FUNCTIONS = _HbarFunctions()


@dataclass(frozen=True, eq=False)
class TruncSeries:
    ring: CoefficientRing
    coeffs: Mapping[Exponent, Any]
    q_order: int
    z_order: int | None = None
    _normalized: bool = field(default=False, repr=False)

    def __post_init__(self) -> None:
        if self.q_order < 0 or (self.z_order is not None and self.z_order < 0):
            raise ValueError("truncation orders must be non-negative")
        if self._normalized:
            return
        cleaned: dict[Exponent, Any] = {}
        for key in sorted(self.coeffs):
            a, b = key
            if a > self.q_order or a < 0 or b < 0:
                continue
            if b > (self.z_order or 0):
                continue
            value = self.ring.coerce(self.coeffs[key])
            if value:
                cleaned[(a, b)] = value
        object.__setattr__(self, "coeffs", cleaned)
        object.__setattr__(self, "_normalized", True)

    # construction -----------------------------------------------------

    @classmethod
    def from_coefficients(
        cls, ring: CoefficientRing, coefficients: Iterable[Any], q_order: int
    ) -> TruncSeries:
        return cls(ring, {(a, 0): c for a, c in enumerate(coefficients)}, q_order)

    @classmethod
    def constant(
        cls, ring: CoefficientRing, value: Any, q_order: int, z_order: int | None = None
    ) -> TruncSeries:
        return cls(ring, {(0, 0): value}, q_order, z_order)

    @classmethod
    def monomial(
        cls,
        ring: CoefficientRing,
        value: Any,
        exponent: Exponent,
        q_order: int,
        z_order: int | None = None,
    ) -> TruncSeries:
        return cls(ring, {exponent: value}, q_order, z_order)

    def _new(
        self, coeffs: dict[Exponent, Any], q_order: int, z_order: int | None, ring=None
    ) -> TruncSeries:
        return TruncSeries(ring or self.ring, coeffs, q_order, z_order)

    # access -----------------------------------------------------------

    def coefficient(self, a: int, b: int = 0) -> Any:
        return self.coeffs.get((a, b), self.ring.zero)

    def q_coefficients(self) -> list[Any]:
        """Coefficients of a pure q-series, indexed by q-power."""
        return [self.coefficient(a) for a in range(self.q_order + 1)]

    def z_slice(self, a: int) -> dict[int, Any]:
        return {b: c for (qa, b), c in self.coeffs.items() if qa == a}

    def items(self) -> Iterator[tuple[Exponent, Any]]:
        return iter(sorted(self.coeffs.items()))

    @property
    def is_pure_q(self) -> bool:
        return self.z_order is None

    def is_zero(self) -> bool:
        return not self.coeffs

    # arithmetic -------------------------------------------------------

    def _check_ring(self, other: TruncSeries) -> None:
        if self.ring != other.ring:
            raise RingMismatchError(
                f"cannot combine series over {self.ring} and {other.ring}",
                left=self.ring.name,
                right=other.ring.name,
            )

    def __add__(self, other: TruncSeries) -> TruncSeries:
        self._check_ring(other)
        q_order = min(self.q_order, other.q_order)
        z_order = combine_z_orders(self.z_order, other.z_order)
        coeffs = dict(self.coeffs)
        for key, value in other.coeffs.items():
            coeffs[key] = coeffs[key] + value if key in coeffs else value
        return self._new(coeffs, q_order, z_order)

    def __neg__(self) -> TruncSeries:
        return TruncSeries(
            self.ring, {k: -v for k, v in self.coeffs.items()}, self.q_order, self.z_order
        )

    def __sub__(self, other: TruncSeries) -> TruncSeries:
        return self + (-other)

    def __mul__(self, other: Any) -> TruncSeries:
        if isinstance(other, TruncSeries):
            return series_mul(self, other)
        value = self.ring.coerce(other)
        return TruncSeries(
            self.ring,
            {k: c * value for k, c in self.coeffs.items()},
            self.q_order,
            self.z_order,
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return (
            self.ring == other.ring
            and self.q_order == other.q_order
            and self.z_order == other.z_order
            and self.coeffs == other.coeffs
        )

    __hash__ = None  # type: ignore[assignment]

    def scale(self, scalar: Rational) -> TruncSeries:
        return TruncSeries(
            self.ring,
            {k: self.ring.scale(c, scalar) for k, c in self.coeffs.items()},
            self.q_order,
            self.z_order,
        )

    def shift_q(self, power: int) -> TruncSeries:
        """Multiply by q**power, dropping what falls past the q bound."""
        return TruncSeries(
            self.ring,
            {(a + power, b): c for (a, b), c in self.coeffs.items()},
            self.q_order,
            self.z_order,
        )

    def truncate(self, q_order: int, z_order: int | None = None) -> TruncSeries:
        if z_order is None:
            z_order = self.z_order
        return TruncSeries(self.ring, dict(self.coeffs), min(q_order, self.q_order), z_order)

    def with_z(self, z_order: int) -> TruncSeries:
        """View a pure q-series as a (q, z)-series with the given z bound."""
        return TruncSeries(self.ring, dict(self.coeffs), self.q_order, z_order)

    def map(self, func: Callable[[Any], Any], ring: CoefficientRing | None = None) -> TruncSeries:
        return TruncSeries(
            ring or self.ring,
            {k: func(c) for k, c in self.coeffs.items()},
            self.q_order,
            self.z_order,
        )

    def lift(self, ring: CoefficientRing) -> TruncSeries:
        if ring == self.ring:
            return self
        return self.map(ring.coerce, ring)

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*q^{a}*z^{b}" for (a, b), c in self.items()) or "0"
        return f"TruncSeries[{self.ring}]({terms}; q<={self.q_order}, z<={self.z_order})"


def combine_z_orders(left: int | None, right: int | None) -> int | None:
    if left is None:
        return right
    if right is None:
        return left
    return min(left, right)


def series_mul(a: TruncSeries, b: TruncSeries) -> TruncSeries:
    a._check_ring(b)
    q_order = min(a.q_order, b.q_order)
    z_order = combine_z_orders(a.z_order, b.z_order)
    z_bound = z_order or 0
    coeffs: dict[Exponent, Any] = {}
    for (a1, b1), c1 in a.coeffs.items():
        if a1 > q_order:
            continue
        for (a2, b2), c2 in b.coeffs.items():
            qa, zb = a1 + a2, b1 + b2
            if qa > q_order or zb > z_bound:
                continue
            product = c1 * c2
            key = (qa, zb)
            coeffs[key] = coeffs[key] + product if key in coeffs else product
    return TruncSeries(a.ring, coeffs, q_order, z_order)


def series_invert(a: TruncSeries) -> TruncSeries:
    constant = a.coefficient(0, 0)
    try:
        inverse_constant = a.ring.inverse(constant)
    except NonUnitError as exc:
        raise NonUnitError(constant, "series_invert constant term") from exc
    if a.is_pure_q:
        # long division, one q-power at a time
        coefficients = a.q_coefficients()
        result = [inverse_constant]
        for n in range(1, a.q_order + 1):
            acc = a.ring.zero
            for k in range(1, n + 1):
                if coefficients[k]:
                    acc = acc + coefficients[k] * result[n - k]
            result.append(-(acc * inverse_constant))
        return TruncSeries.from_coefficients(a.ring, result, a.q_order)
    # a = c·(1 + u) with u nilpotent under truncation
    u = (a * inverse_constant) - TruncSeries.constant(a.ring, a.ring.one, a.q_order, a.z_order)
    term = TruncSeries.constant(a.ring, a.ring.one, a.q_order, a.z_order)
    total = term
    for _ in range(a.q_order + (a.z_order or 0)):
        term = -(term * u)
        if term.is_zero():
            break
        total = total + term
    return total * inverse_constant


def series_pow(a: TruncSeries, exponent: int) -> TruncSeries:
    result = TruncSeries.constant(a.ring, a.ring.one, a.q_order, a.z_order)
    for _ in range(exponent):
        result = result * a
    return result


def series_exp(a: TruncSeries) -> TruncSeries:
    """exp(a) by its defining power series; requires a(0, 0) = 0."""
    if a.coefficient(0, 0):
        raise InvalidSubstitutionError(
            "exp is only defined here for series without constant term",
            constant=a.coefficient(0, 0),
        )
    term = TruncSeries.constant(a.ring, a.ring.one, a.q_order, a.z_order)
    total = term
    for k in range(1, a.q_order + (a.z_order or 0) + 1):
        term = (term * a).scale(QQ(1, k))
        if term.is_zero():
            break
        total = total + term
    return total


def series_compose_qshift(a: TruncSeries, g: TruncSeries) -> TruncSeries:
    """Return a(q·e^{g}) truncated to the common orders.

    ``g`` may live in a smaller ring than ``a`` (rationals into QQ(hbar), scalars
    into cohomology); it is lifted after exponentiation.
    """
    if g.coefficient(0, 0):
        raise InvalidSubstitutionError(
            "q-shift exponent must vanish at q = z = 0", constant=g.coefficient(0, 0)
        )
    q_order = min(a.q_order, g.q_order)
    z_order = combine_z_orders(a.z_order, g.z_order)
    exp_g = series_exp(g.truncate(q_order)).lift(a.ring)
    if z_order is not None:
        exp_g = exp_g.with_z(z_order) if exp_g.z_order is None else exp_g
    power = TruncSeries.constant(a.ring, a.ring.one, q_order, z_order)
    total = TruncSeries(a.ring, {}, q_order, z_order)
    for d in range(q_order + 1):
        slice_d = a.z_slice(d)
        if slice_d:
            piece = TruncSeries(a.ring, {(0, b): c for b, c in slice_d.items()}, q_order, z_order)
            total = total + (piece * power).shift_q(d)
        power = power * exp_g
    return total


def solve_shift_inverse(g: TruncSeries) -> TruncSeries:
    """The ĝ with ĝ(Q) + g(Q·e^{ĝ(Q)}) = 0, solved one q-power at a time."""
    if not g.is_pure_q:
        raise InvalidSubstitutionError("shift inversion needs a pure q-series")
    if g.coefficient(0):
        raise InvalidSubstitutionError(
            "q-shift exponent must vanish at q = 0", constant=g.coefficient(0)
        )
    inverse = TruncSeries(g.ring, {}, g.q_order)
    for n in range(1, g.q_order + 1):
        # the q^n coefficient of ĝ + g(Q e^ĝ) is linear in ĝ_n with slope 1
        residual = inverse + series_compose_qshift(g, inverse)
        correction = residual.coefficient(n)
        if correction:
            inverse = inverse - TruncSeries.monomial(g.ring, correction, (n, 0), g.q_order)
    return inverse
