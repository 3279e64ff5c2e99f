from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Any, Sequence

from quintic_mirror.algebra.rational import HBAR_GEN, QQ, RatFuncH, Rational
from quintic_mirror.errors import PoleMultiplicityError, TruncationError


def residue_simple(f: RatFuncH, pole: Any) -> Rational:
    """Residue of ``f`` at a simple pole, num(pole)/den'(pole)."""
    pole = QQ.convert(pole)
    denom = f.denom
    if denom.evaluate(HBAR_GEN, pole):
        raise PoleMultiplicityError(pole, 0)
    derivative = denom.diff(HBAR_GEN)
    order = 1
    slope = derivative.evaluate(HBAR_GEN, pole)
    probe = derivative
    while not probe.evaluate(HBAR_GEN, pole):
        probe = probe.diff(HBAR_GEN)
        order += 1
    if order != 1:
        raise PoleMultiplicityError(pole, order)
    return f.numer.evaluate(HBAR_GEN, pole) / slope


@dataclass(frozen=True)
class FactoredFraction:
    """N(p) / Π (p − root)^multiplicity with the denominator kept factored.

    ``numerator`` lists coefficients of N by ascending power of p. Coefficients
    and roots share one commutative ring whose unit is ``one``.
    """

    numerator: tuple[Any, ...]
    poles: tuple[tuple[Any, int], ...]
    one: Any = QQ.one

    def multiplicity(self, center: Any) -> int:
        return sum(mult for root, mult in self.poles if root == center)


def residue_at_order(f: FactoredFraction, center: Any, order: int) -> Any:
    """Coefficient of (p − center)^−1 in the local expansion of ``f``.

    The numerator is Taylor-shifted to the center and every other factor of the
    denominator is expanded by the binomial series, all to depth ``order``.
    """
    multiplicity = f.multiplicity(center)
    if multiplicity > order:
        raise TruncationError(
            f"pole of order {multiplicity} at {center} exceeds expansion depth {order}",
            center=center,
            pole_order=multiplicity,
            depth=order,
        )
    if multiplicity == 0:
        return f.one * 0
    local = _shift_numerator(f.numerator, center, order, f.one)
    for root, mult in f.poles:
        if root == center:
            continue
        local = _truncated_product(local, _inverse_power(center - root, mult, order, f.one), order)
    return local[multiplicity - 1]


def _shift_numerator(coefficients: Sequence[Any], center: Any, depth: int, one: Any) -> list[Any]:
    zero = one * 0
    powers = [one]
    for _ in range(len(coefficients)):
        powers.append(powers[-1] * center)
    shifted = []
    for j in range(depth):
        acc = zero
        for i in range(j, len(coefficients)):
            if coefficients[i]:
                acc = acc + coefficients[i] * powers[i - j] * comb(i, j)
        shifted.append(acc)
    return shifted


def _inverse_power(delta: Any, exponent: int, depth: int, one: Any) -> list[Any]:
    """Taylor coefficients in t of (delta + t)^−exponent."""
    inverse = one / delta
    lead = one
    for _ in range(exponent):
        lead = lead * inverse
    terms = []
    scale = lead
    for k in range(depth):
        sign = -1 if k % 2 else 1
        terms.append(scale * (sign * comb(exponent + k - 1, k)))
        scale = scale * inverse
    return terms


def _truncated_product(left: list[Any], right: list[Any], depth: int) -> list[Any]:
    zero = left[0] * 0
    out = [zero] * depth
    for i, a in enumerate(left[:depth]):
        if not a:
            continue
        for j, b in enumerate(right[: depth - i]):
            out[i + j] = out[i + j] + a * b
    return out
