"""Hypergeometric series of the quintic and the Picard–Fuchs operator.

The prefactor e^{P ln q/ħ} is never materialized: every series here is the
stripped series Z, and the fourth-order operator is applied in conjugated
form, D ↦ D + P/ħ with D = q d/dq, cleared of ħ denominators.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from math import factorial
from typing import Any, Iterator

from quintic_mirror.algebra.cohomology import (
    COHOM_HBAR,
    CohomClass,
    WeightSpec,
    invert_unit,
)
from quintic_mirror.algebra.rational import (
    HBAR,
    HBAR_FIELD,
    HBAR_GEN,
    HBAR_RING,
    QQ,
    RatFuncH,
    coefficient_at_infinity,
    evaluate,
    laurent_at_infinity,
    laurent_at_zero,
    linear,
    product,
)
from quintic_mirror.algebra.series import HBAR_FUNCTIONS, RATIONALS, TruncSeries
from quintic_mirror.parallel import parallel_map
from quintic_mirror.reports import VerificationReport

logger = logging.getLogger(__name__)

# Z over ℚ(ħ)[P]/(P⁴), pure in q
StrippedSeries = TruncSeries


def _check_order(q_order: int) -> None:
    if q_order < 0:
        raise ValueError("q_order must be non-negative")


def _scaled_ratio(d: int) -> CohomClass:
    """Z_d / Z_{d−1} at ħ = 1: 5·Π_{j=1}^{4}(5P + 5d − 5 + j) · (P + d)^{−4}."""
    numerator = CohomClass.constant(RATIONALS, 5)
    for j in range(1, 5):
        numerator = numerator * CohomClass(RATIONALS, (5 * d - 5 + j, 5))
    inverse = invert_unit(CohomClass(RATIONALS, (d, 1)))
    return numerator * inverse * inverse * inverse * inverse


def _restore_hbar(cls: CohomClass) -> CohomClass:
    # Z_d is homogeneous of degree 0 in (P, ħ): the P^k slot carries ħ^{−k}
    return CohomClass(
        HBAR_FUNCTIONS,
        tuple(HBAR_FIELD(c) / HBAR**k for k, c in enumerate(cls.c)),
    )


def i_series(q_order: int) -> StrippedSeries:
    """Z(q) = Σ_d q^d Π_{m=1}^{5d}(5P+mħ) / Π_{m=1}^{d}(P+mħ)^5 mod P⁴."""
    _check_order(q_order)
    coefficients = [CohomClass.constant(RATIONALS, 1)]
    for d in range(1, q_order + 1):
        coefficients.append(coefficients[-1] * _scaled_ratio(d))
        logger.debug("hypergeometric coefficient q^%s done", d)
    return TruncSeries.from_coefficients(
        COHOM_HBAR, [_restore_hbar(c) for c in coefficients], q_order
    )


def i_coefficient(d: int) -> CohomClass:
    """The q^d coefficient of Z computed directly over ℚ(ħ), without homogeneity."""
    top = CohomClass.constant(HBAR_FUNCTIONS, 1)
    for m in range(1, 5 * d + 1):
        top = top * CohomClass(HBAR_FUNCTIONS, (HBAR * m, 5))
    for m in range(1, d + 1):
        inverse = invert_unit(CohomClass(HBAR_FUNCTIONS, (HBAR * m, 1)))
        for _ in range(5):
            top = top * inverse
    return top


@dataclass(frozen=True, eq=False)
class LocalizedSeries:
    """The five fixed-point localizations Z_α, each a q-series over ℚ(ħ)."""

    weights: WeightSpec
    components: tuple[TruncSeries, ...]

    def __post_init__(self) -> None:
        if len(self.components) != len(self.weights.lambdas):
            raise ValueError("one component per fixed point is required")

    def __getitem__(self, alpha: int) -> TruncSeries:
        return self.components[alpha]

    def __iter__(self) -> Iterator[TruncSeries]:
        return iter(self.components)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LocalizedSeries):
            return NotImplemented
        return self.weights == other.weights and self.components == other.components

    __hash__ = None  # type: ignore[assignment]

    @property
    def q_order(self) -> int:
        return min(component.q_order for component in self.components)

    def coefficient(self, alpha: int, d: int) -> RatFuncH:
        return self.components[alpha].coefficient(d)

    def truncate(self, q_order: int) -> LocalizedSeries:
        return LocalizedSeries(self.weights, tuple(c.truncate(q_order) for c in self.components))

    def replace(self, alpha: int, d: int, value: Any) -> LocalizedSeries:
        component = self.components[alpha]
        coeffs = dict(component.coeffs)
        coeffs[(d, 0)] = value
        updated = TruncSeries(HBAR_FUNCTIONS, coeffs, component.q_order)
        return LocalizedSeries(
            self.weights,
            tuple(updated if a == alpha else c for a, c in enumerate(self.components)),
        )


def equivariant_coefficient(alpha: int, d: int, w: WeightSpec) -> RatFuncH:
    """Z_α at q^d: Π_{m=1}^{5d}(5λ_α+mħ) / (d! ħ^d Π_{m=1}^{d} Π_{β≠α}(λ_α−λ_β+mħ))."""
    lam = w[alpha]
    numerator = product([linear(5 * lam, m) for m in range(1, 5 * d + 1)], HBAR_RING.one)
    denominator = HBAR_RING(QQ(factorial(d))) * HBAR_GEN**d
    for m in range(1, d + 1):
        for beta, other in enumerate(w):
            if beta != alpha:
                denominator = denominator * linear(lam - other, m)
    return HBAR_FIELD.new(numerator, denominator)


def i_series_equivariant(q_order: int, w: WeightSpec) -> LocalizedSeries:
    _check_order(q_order)

    def component(alpha: int) -> TruncSeries:
        values = [equivariant_coefficient(alpha, d, w) for d in range(q_order + 1)]
        logger.debug("localized series at fixed point %s through q^%s", alpha + 1, q_order)
        return TruncSeries.from_coefficients(HBAR_FUNCTIONS, values, q_order)

    return LocalizedSeries(w, tuple(parallel_map(component, range(len(w.lambdas)))))


def f0_closed_form(d: int) -> int:
    return factorial(5 * d) // factorial(d) ** 5


def extract_f0_f1(q_order: int) -> tuple[TruncSeries, TruncSeries]:
    """f₀ = Σ (5d)!/(d!)⁵ q^d and f₁ = Σ (5d)!/(d!)⁵ (Σ_{m=d+1}^{5d} 5/m) q^d."""
    _check_order(q_order)
    f0 = []
    f1 = []
    for d in range(q_order + 1):
        lead = QQ(f0_closed_form(d))
        f0.append(lead)
        f1.append(lead * sum((QQ(5, m) for m in range(d + 1, 5 * d + 1)), QQ.zero))
    return (
        TruncSeries.from_coefficients(RATIONALS, f0, q_order),
        TruncSeries.from_coefficients(RATIONALS, f1, q_order),
    )


def ode_recurrence_solution(q_order: int) -> TruncSeries:
    """Holomorphic solution of the Picard–Fuchs equation normalized by a₀ = 1."""
    _check_order(q_order)
    values = [QQ.one]
    for d in range(1, q_order + 1):
        factor = QQ(5 * (5 * d - 1) * (5 * d - 2) * (5 * d - 3) * (5 * d - 4), d**4)
        values.append(values[-1] * factor)
    return TruncSeries.from_coefficients(RATIONALS, values, q_order)


def ode_residual(z: StrippedSeries, d: int) -> CohomClass:
    """(P+dħ)⁴ Z_d − 5 Π_{m=1}^{4}(5P + 5(d−1)ħ + mħ) Z_{d−1}."""
    shift = CohomClass(HBAR_FUNCTIONS, (HBAR * d, 1))
    lhs = z.coefficient(d) * shift * shift * shift * shift
    if d == 0:
        return lhs
    rhs = z.coefficient(d - 1) * 5
    for m in range(1, 5):
        rhs = rhs * CohomClass(HBAR_FUNCTIONS, (HBAR * (5 * (d - 1) + m), 5))
    return lhs - rhs


def verify_ode(z: StrippedSeries, q_order: int) -> VerificationReport:
    report = VerificationReport("verify-ode", {"order": q_order})
    if z.q_order < q_order:
        report.add("truncation", False, available=z.q_order, requested=q_order)
        return report
    for d in range(q_order + 1):
        residual = ode_residual(z, d)
        report.add(f"q^{d}", not residual, residual=[str(c) for c in residual.c] if residual else [])
    return report


def verify_f0(q_order: int) -> VerificationReport:
    """Closed form, ODE recurrence and the scalar part of Z agree coefficientwise."""
    report = VerificationReport("verify-f0", {"order": q_order})
    closed, f1 = extract_f0_f1(q_order)
    recurrence = ode_recurrence_solution(q_order)
    z = i_series(q_order)
    for d in range(q_order + 1):
        scalar = z.coefficient(d)[0]
        linear_part = z.coefficient(d)[1]
        from_z = coefficient_at_infinity(scalar, 0)
        agree = closed.coefficient(d) == recurrence.coefficient(d) == from_z
        report.add(
            f"f0 q^{d}",
            agree,
            closed_form=closed.coefficient(d),
            recurrence=recurrence.coefficient(d),
            i_series=from_z,
        )
        hbar_part = coefficient_at_infinity(linear_part, -1)
        report.add(f"f1 q^{d}", hbar_part == f1.coefficient(d), f1=f1.coefficient(d), i_series=hbar_part)
    return report


def equivariant_asymptotics(q_order: int, w: WeightSpec) -> VerificationReport:
    """ħ → ∞ expansion of each Z_α coefficient: f₀ + λ_α f₁/ħ + O(ħ^{−2})."""
    report = VerificationReport(
        "equivariant-asymptotics", {"order": q_order, "lambdas": w.as_strings()}
    )
    f0, f1 = extract_f0_f1(q_order)
    z = i_series_equivariant(q_order, w)
    for alpha in range(len(w.lambdas)):
        for d in range(q_order + 1):
            expansion = laurent_at_infinity(z.coefficient(alpha, d), 2)
            lead = expansion.get(0, QQ.zero)
            sub = expansion.get(-1, QQ.zero)
            report.add(
                f"alpha={alpha + 1} q^{d}",
                lead == f0.coefficient(d) and sub == w[alpha] * f1.coefficient(d),
                hbar0=lead,
                hbar_minus1=sub,
                regular_at_infinity=max(expansion, default=0) <= 0,
            )
    return report


def equivariant_limit_check(
    q_order: int, w: WeightSpec, hbar_values: tuple[Any, ...] = (1, 3)
) -> VerificationReport:
    """Non-equivariant limit along λ = ε·w to first order in ε.

    At a fixed ħ both sides are rational in ε; the generator of ℚ(ħ) stands in
    for ε and the difference must vanish to order ε².
    """
    report = VerificationReport(
        "equivariant-limit", {"order": q_order, "lambdas": w.as_strings()}
    )
    z = i_series(q_order)
    eps = HBAR_GEN
    for h in hbar_values:
        h = QQ.convert(h)
        for d in range(q_order + 1):
            class_at_h = [evaluate(c, h) for c in z.coefficient(d).c]
            for alpha, lam in enumerate(w):
                nonequivariant = sum(
                    (HBAR_RING(c * lam**k) * eps**k for k, c in enumerate(class_at_h)),
                    HBAR_RING.zero,
                )
                numerator = product(
                    [linear(m * h, 5 * lam) for m in range(1, 5 * d + 1)], HBAR_RING.one
                )
                denominator = HBAR_RING(QQ(factorial(d)) * h**d)
                for m in range(1, d + 1):
                    for beta, other in enumerate(w):
                        if beta != alpha:
                            denominator = denominator * linear(m * h, lam - other)
                difference = HBAR_FIELD.new(numerator, denominator) - HBAR_FIELD.new(nonequivariant)
                low = laurent_at_zero(difference, 2)
                report.add(f"hbar={h} alpha={alpha + 1} q^{d}", not low, low_order_terms=low)
    return report
