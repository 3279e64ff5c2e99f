"""Scalars of the engine: rationals, polynomials and rational functions in ħ.

``Rational`` is the ground field ``QQ`` of sympy's polys module (gmpy2 backed
when available). ``PolyH`` and ``RatFuncH`` are elements of ``QQ[hbar]`` and
``QQ(hbar)``; sympy keeps fractions gcd-reduced with a sign-normalized
denominator, so ``==`` is structural.
"""
from __future__ import annotations

from typing import Any, Iterable, Sequence

from sympy.polys.domains import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.ring_series import rs_mul, rs_series_inversion
from sympy.polys.rings import PolyElement

from quintic_mirror.errors import NonUnitError

Rational = type(QQ.one)
PolyH = PolyElement
RatFuncH = FracElement

HBAR_FIELD, HBAR = field("hbar", QQ)
HBAR_RING = HBAR_FIELD.ring
HBAR_GEN = HBAR_RING.gens[0]


def format_rational(value: Any) -> str:
    value = QQ.convert(value)
    return f"{int(QQ.numer(value))}/{int(QQ.denom(value))}"


def is_integral(value: Any) -> bool:
    return int(QQ.denom(QQ.convert(value))) == 1


def as_int(value: Any) -> int:
    value = QQ.convert(value)
    if not is_integral(value):
        raise ValueError(f"{value} is not an integer")
    return int(QQ.numer(value))


def poly_from_coeffs(coeffs: Iterable[Any]) -> PolyH:
    """Build a polynomial in ħ from coefficients listed by ascending power."""
    terms = {(power,): QQ.convert(c) for power, c in enumerate(coeffs) if c}
    return HBAR_RING.from_dict(terms)


def poly_valuation(poly: PolyH) -> int:
    return min(power for (power,) in poly.keys())


def ratfunc(numer: Any, denom: Any = None) -> RatFuncH:
    numer = _as_poly(numer)
    denom = HBAR_RING.one if denom is None else _as_poly(denom)
    if not denom:
        raise NonUnitError(0, "rational function denominator")
    return HBAR_FIELD.new(numer, denom)


def as_ratfunc(value: Any) -> RatFuncH:
    if isinstance(value, FracElement):
        return value
    if isinstance(value, PolyElement):
        return HBAR_FIELD.new(value)
    return HBAR_FIELD(QQ.convert(value))


def _as_poly(value: Any) -> PolyH:
    if isinstance(value, PolyElement):
        return value
    return HBAR_RING(QQ.convert(value))


def linear(root: Any, scale: Any = 1) -> PolyH:
    """The polynomial ``scale*ħ + root``."""
    return HBAR_RING(QQ.convert(scale)) * HBAR_GEN + HBAR_RING(QQ.convert(root))


def evaluate(f: PolyH | RatFuncH, value: Any) -> Rational:
    value = QQ.convert(value)
    if isinstance(f, PolyElement):
        return f.evaluate(HBAR_GEN, value)
    denom = f.denom.evaluate(HBAR_GEN, value)
    if not denom:
        raise NonUnitError(f.denom, f"evaluation at hbar={value}")
    return f.numer.evaluate(HBAR_GEN, value) / denom


def negate_hbar(f: PolyH | RatFuncH) -> PolyH | RatFuncH:
    """Substitute ħ ↦ −ħ."""
    if isinstance(f, PolyElement):
        return HBAR_RING.from_dict(
            {(p,): (-c if p % 2 else c) for (p,), c in f.items()}
        )
    return HBAR_FIELD.new(negate_hbar(f.numer), negate_hbar(f.denom))


def hbar_degree(f: RatFuncH) -> int:
    """deg(num) − deg(den); regular at ħ = ∞ iff this is ≤ 0."""
    if not f:
        return -(10**9)
    return f.numer.degree() - f.denom.degree()


def is_polynomial(f: RatFuncH) -> bool:
    return f.denom.degree() == 0


def split_polynomial(f: RatFuncH) -> tuple[PolyH, RatFuncH]:
    """Return the polynomial part and the proper (pole) part of ``f``."""
    quotient, remainder = divmod(f.numer, f.denom)
    return quotient, HBAR_FIELD.new(remainder, f.denom)


def laurent_at_zero(f: RatFuncH, prec: int) -> dict[int, Rational]:
    """Coefficients of the Laurent expansion of ``f`` at ħ = 0 for powers < ``prec``."""
    if not f:
        return {}
    numer, denom = f.numer, f.denom
    v_num, v_den = poly_valuation(numer), poly_valuation(denom)
    shift = v_num - v_den
    length = prec - shift
    if length <= 0:
        return {}
    numer0 = _drop_low(numer, v_num)
    denom0 = _drop_low(denom, v_den)
    series = rs_mul(numer0, rs_series_inversion(denom0, HBAR_GEN, length), HBAR_GEN, length)
    return {power + shift: coeff for (power,), coeff in series.items() if coeff}


def laurent_at_infinity(f: RatFuncH, count: int) -> dict[int, Rational]:
    """Leading ``count`` powers of the expansion of ``f`` at ħ = ∞.

    Keys are ħ-exponents; the expansion runs downward from ``hbar_degree(f)``.
    """
    if not f:
        return {}
    top = hbar_degree(f)
    reversed_f = HBAR_FIELD.new(_reverse(f.numer), _reverse(f.denom))
    # f(ħ) = ħ^top · reversed_f(1/ħ) with reversed_f regular and nonzero at 0
    expansion = laurent_at_zero(reversed_f, count)
    return {top - power: coeff for power, coeff in expansion.items()}


def coefficient_at_infinity(f: RatFuncH, power: int) -> Rational:
    if not f:
        return QQ.zero
    count = hbar_degree(f) - power + 1
    if count <= 0:
        return QQ.zero
    return laurent_at_infinity(f, count).get(power, QQ.zero)


def _drop_low(poly: PolyH, valuation: int) -> PolyH:
    return HBAR_RING.from_dict({(p - valuation,): c for (p,), c in poly.items()})


def _reverse(poly: PolyH) -> PolyH:
    top = poly.degree()
    return HBAR_RING.from_dict({(top - p,): c for (p,), c in poly.items()})


def product(factors: Sequence[Any], one: Any) -> Any:
    result = one
    for factor in factors:
        result = result * factor
    return result
