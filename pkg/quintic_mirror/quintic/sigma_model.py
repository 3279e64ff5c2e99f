"""The linear sigma-model series L(q, z) two ways.

``l_series_dh`` integrates e^{pz}·Euler(LV_d) over the toric compactification
by residues at the fixed points p = kħ; ``l_series_pairing`` evaluates the
pairing of two stripped hypergeometric series. They must agree exactly.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial

from quintic_mirror.algebra.cohomology import COHOM_HBAR, DIMENSION, CohomClass, pair_nonequiv
from quintic_mirror.algebra.rational import HBAR, HBAR_FIELD, QQ, RatFuncH, is_polynomial, negate_hbar
from quintic_mirror.algebra.residues import FactoredFraction, residue_at_order
from quintic_mirror.algebra.series import (
    HBAR_FUNCTIONS,
    TruncSeries,
    combine_z_orders,
    series_compose_qshift,
)
from quintic_mirror.errors import ConsistencyError
from quintic_mirror.parallel import parallel_map
from quintic_mirror.quintic.hypergeom import StrippedSeries, i_series
from quintic_mirror.reports import VerificationReport

logger = logging.getLogger(__name__)

POLE_ORDER = 5


@dataclass(frozen=True)
class SigmaModelTerm:
    """e^{pz}·5p(5p−ħ)…(5p−5dħ) over p⁵(p−ħ)⁵…(p−dħ)⁵ at degree d."""

    d: int

    def euler_numerator(self) -> list[RatFuncH]:
        coeffs = [HBAR_FIELD.zero, HBAR_FIELD(5)]
        for j in range(1, 5 * self.d + 1):
            coeffs = _times_linear(coeffs, HBAR_FIELD(5), -HBAR * j)
        return coeffs

    def poles(self) -> tuple[tuple[RatFuncH, int], ...]:
        return tuple((HBAR * k, POLE_ORDER) for k in range(self.d + 1))

    def integrand(self, b: int) -> FactoredFraction:
        """The z^b slice: p^b/b! times the Euler class over the pole factors."""
        shifted = [HBAR_FIELD.zero] * b + [c / factorial(b) for c in self.euler_numerator()]
        return FactoredFraction(tuple(shifted), self.poles(), HBAR_FIELD.one)

    def coefficient(self, b: int) -> RatFuncH:
        fraction = self.integrand(b)
        total = HBAR_FIELD.zero
        for center, order in fraction.poles:
            total += residue_at_order(fraction, center, order)
        return total


def _times_linear(coeffs: list[RatFuncH], slope: RatFuncH, constant: RatFuncH) -> list[RatFuncH]:
    """Multiply a polynomial in p by (slope·p + constant)."""
    out = [HBAR_FIELD.zero] * (len(coeffs) + 1)
    for i, c in enumerate(coeffs):
        out[i] += c * constant
        out[i + 1] += c * slope
    return out


def l_series_dh(q_order: int, z_order: int) -> TruncSeries:
    if q_order < 0 or z_order < 0:
        raise ValueError("orders must be non-negative")

    def degree_slice(d: int) -> dict[tuple[int, int], RatFuncH]:
        term = SigmaModelTerm(d)
        values = {}
        for b in range(z_order + 1):
            value = term.coefficient(b)
            if not is_polynomial(value):
                raise ConsistencyError(
                    f"sigma-model coefficient at q^{d} z^{b} is not polynomial in hbar",
                    d=d,
                    b=b,
                    value=value,
                )
            values[(d, b)] = value
        logger.debug("sigma-model residues done for d=%s", d)
        return values

    coeffs: dict[tuple[int, int], RatFuncH] = {}
    for piece in parallel_map(degree_slice, range(q_order + 1)):
        coeffs.update(piece)
    return TruncSeries(HBAR_FUNCTIONS, coeffs, q_order, z_order)


def exp_pz(q_order: int, z_order: int) -> TruncSeries:
    """e^{Pz} as a (q, z)-series over ℚ(ħ)[P]/(P⁴); it stops at P³."""
    coeffs = {}
    for b in range(min(z_order, DIMENSION - 1) + 1):
        slots = [0] * b + [QQ(1, factorial(b))]
        coeffs[(0, b)] = CohomClass(HBAR_FUNCTIONS, tuple(slots))
    return TruncSeries(COHOM_HBAR, coeffs, q_order, z_order)


def pair_series(left: TruncSeries, right: TruncSeries) -> TruncSeries:
    """Apply the quintic pairing coefficientwise to a product of two series."""
    q_order = min(left.q_order, right.q_order)
    z_order = combine_z_orders(left.z_order, right.z_order)
    coeffs: dict[tuple[int, int], RatFuncH] = {}
    for (a1, b1), x in left.coeffs.items():
        for (a2, b2), y in right.coeffs.items():
            key = (a1 + a2, b1 + b2)
            if key[0] > q_order or key[1] > (z_order or 0):
                continue
            value = pair_nonequiv(x, y)
            coeffs[key] = coeffs[key] + value if key in coeffs else value
    return TruncSeries(HBAR_FUNCTIONS, coeffs, q_order, z_order)


def l_series_pairing(q_order: int, z_order: int, z: StrippedSeries | None = None) -> TruncSeries:
    """⟨e^{Pz} Z(q e^{ħz}, ħ), Z(q, −ħ)⟩."""
    if q_order < 0 or z_order < 0:
        raise ValueError("orders must be non-negative")
    z = (z or i_series(q_order)).truncate(q_order)
    shift = TruncSeries.monomial(HBAR_FUNCTIONS, HBAR, (0, 1), q_order, z_order)
    shifted = series_compose_qshift(z.with_z(z_order), shift)
    reflected = z.map(lambda cls: cls.map(negate_hbar)).with_z(z_order)
    return pair_series(exp_pz(q_order, z_order) * shifted, reflected)


def verify_theorem_a(q_order: int, z_order: int, z: StrippedSeries | None = None) -> VerificationReport:
    report = VerificationReport("verify-sigma-model", {"max_degree": q_order, "z_order": z_order})
    residues = l_series_dh(q_order, z_order)
    pairing = l_series_pairing(q_order, z_order, z)
    for d in range(q_order + 1):
        for b in range(z_order + 1):
            left, right = residues.coefficient(d, b), pairing.coefficient(d, b)
            report.add(f"q^{d} z^{b}", left == right, residues=left, pairing=right)
        if z_order >= DIMENSION - 1:
            naive = QQ(5 ** (5 * d + 1), 6)
            value = residues.coefficient(d, DIMENSION - 1)
            report.add(f"q^{d} z^3 closed form", value == HBAR_FIELD(naive), expected=naive, value=value)
    return report
