"""Mirror transformation of the hypergeometric series and the Yukawa coupling.

J(Q) = I(q)/f₀(q) in the flat coordinate ln Q = ln q + g(q), g = f₁/f₀.
On stripped series this is Z_J(Q) = e^{−P g(q)/ħ} Z(q)/f₀(q) with
q = Q·e^{ĝ(Q)}, where ĝ(Q) + g(Q e^{ĝ(Q)}) = 0.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import overload

from quintic_mirror.algebra.cohomology import COHOM_HBAR, CohomClass
from quintic_mirror.algebra.rational import (
    HBAR,
    HBAR_FIELD,
    QQ,
    coefficient_at_infinity,
)
from quintic_mirror.algebra.series import (
    HBAR_FUNCTIONS,
    RATIONALS,
    TruncSeries,
    series_compose_qshift,
    series_exp,
    series_invert,
    solve_shift_inverse,
)
from quintic_mirror.errors import ConsistencyError, NormalizationError
from quintic_mirror.quintic.hypergeom import LocalizedSeries, StrippedSeries, extract_f0_f1, i_series
from quintic_mirror.reports import VerificationReport

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class MirrorMap:
    g: TruncSeries
    f0: TruncSeries

    def __post_init__(self) -> None:
        if self.g.coefficient(0):
            raise NormalizationError("mirror map exponent must vanish at q = 0")
        if self.f0.coefficient(0) != QQ.one:
            raise NormalizationError("f0 must start with 1")

    @property
    def q_order(self) -> int:
        return min(self.g.q_order, self.f0.q_order)

    @classmethod
    def identity(cls, q_order: int) -> MirrorMap:
        return cls(
            TruncSeries(RATIONALS, {}, q_order),
            TruncSeries.constant(RATIONALS, QQ.one, q_order),
        )

    def inverse_shift(self) -> TruncSeries:
        return solve_shift_inverse(self.g)


def build_mirror_map(q_order: int) -> MirrorMap:
    if q_order < 1:
        raise ValueError("the mirror map needs q_order >= 1")
    f0, f1 = extract_f0_f1(q_order)
    g = f1 * series_invert(f0)
    logger.debug("mirror map through q^%s, g_1 = %s", q_order, g.coefficient(1))
    return MirrorMap(g=g, f0=f0)


def mirror_coordinate(q_order: int) -> tuple[TruncSeries, TruncSeries]:
    """Q = q·e^{g(q)} as a series in q, and q = Q·e^{ĝ(Q)} as a series in Q."""
    m = build_mirror_map(q_order)
    q = TruncSeries.monomial(RATIONALS, QQ.one, (1, 0), q_order)
    return series_compose_qshift(q, m.g), series_compose_qshift(q, m.inverse_shift())


@dataclass(frozen=True, eq=False)
class JSeries:
    z_j: StrippedSeries
    mirror: MirrorMap

    @property
    def q_order(self) -> int:
        return self.z_j.q_order

    def hbar0_part(self, d: int) -> CohomClass:
        cls = self.z_j.coefficient(d)
        return CohomClass(RATIONALS, tuple(coefficient_at_infinity(c, 0) for c in cls.c))

    def linear_hbar_minus1(self, d: int) -> object:
        return coefficient_at_infinity(self.z_j.coefficient(d)[1], -1)

    def invariant_violations(self) -> list[dict[str, object]]:
        problems: list[dict[str, object]] = []
        if self.z_j.coefficient(0) != COHOM_HBAR.one:
            problems.append({"d": 0, "issue": "constant term is not 1"})
        for d in range(1, self.q_order + 1):
            if self.hbar0_part(d):
                problems.append({"d": d, "issue": "nonzero hbar^0 part", "value": repr(self.hbar0_part(d))})
            if self.linear_hbar_minus1(d):
                problems.append({"d": d, "issue": "nonzero P/hbar part", "value": self.linear_hbar_minus1(d)})
        return problems


def _prefactor_shift(g: TruncSeries, lam: object = None) -> TruncSeries:
    """e^{−λ g/ħ} with λ = P (non-equivariant) or a fixed-point weight."""
    if lam is None:
        exponent = g.map(lambda c: CohomClass(HBAR_FUNCTIONS, (0, -HBAR_FIELD(c) / HBAR)), COHOM_HBAR)
    else:
        exponent = g.map(lambda c: -HBAR_FIELD(c * QQ.convert(lam)) / HBAR, HBAR_FUNCTIONS)
    return series_exp(exponent)


def _transform(
    z: StrippedSeries, m: MirrorMap, g_hat: TruncSeries, inverse_f0: TruncSeries
) -> JSeries:
    order = min(z.q_order, m.q_order)
    w = _prefactor_shift(m.g.truncate(order)) * z.truncate(order)
    w = w * inverse_f0.truncate(order).lift(COHOM_HBAR)
    return JSeries(series_compose_qshift(w, g_hat.truncate(order)), m)


@overload
def apply_mirror(z: StrippedSeries, m: MirrorMap) -> JSeries: ...


@overload
def apply_mirror(z: LocalizedSeries, m: MirrorMap) -> LocalizedSeries: ...


def apply_mirror(z, m):
    """Divide by f₀, move the prefactor to ln Q and re-express in Q."""
    g_hat = m.inverse_shift()
    inverse_f0 = series_invert(m.f0)
    if isinstance(z, LocalizedSeries):
        components = []
        for lam, component in zip(z.weights, z.components):
            order = min(component.q_order, m.q_order)
            w = _prefactor_shift(m.g.truncate(order), lam) * component.truncate(order)
            w = w * inverse_f0.truncate(order).lift(HBAR_FUNCTIONS)
            components.append(series_compose_qshift(w, g_hat.truncate(order)))
        return LocalizedSeries(z.weights, tuple(components))

    j = _transform(z, m, g_hat, inverse_f0)
    problems = j.invariant_violations()
    if problems:
        raise NormalizationError("mirror-transformed series violates J asymptotics", problems=problems)
    return j


def yukawa(j: JSeries, q_order: int | None = None) -> TruncSeries:
    """K(Q) = ⟨(P+ħD)² Z_J, P⟩, D = Q d/dQ; only the ħ⁰ part may survive."""
    order = j.q_order if q_order is None else min(q_order, j.q_order)
    values = []
    for d in range(order + 1):
        x = j.z_j.coefficient(d)
        # P² coefficient of (P + dħ)² X, times the quintic degree
        value = (x[0] + x[1] * (HBAR * (2 * d)) + x[2] * (HBAR**2 * d**2)) * 5
        if value.numer.degree() > 0 or value.denom.degree() > 0:
            raise ConsistencyError(
                f"Yukawa coefficient at Q^{d} still depends on hbar", d=d, value=value
            )
        values.append(coefficient_at_infinity(value, 0))
    return TruncSeries.from_coefficients(RATIONALS, values, order)


def j_series(q_order: int) -> JSeries:
    return apply_mirror(i_series(q_order), build_mirror_map(max(q_order, 1)))


def verify_asymptotics(q_order: int) -> VerificationReport:
    report = VerificationReport("verify-asymptotics", {"order": q_order})
    m = build_mirror_map(max(q_order, 1))
    order = min(q_order, m.q_order)
    j = _transform(i_series(order), m, m.inverse_shift(), series_invert(m.f0))
    report.add("constant term", j.z_j.coefficient(0) == COHOM_HBAR.one)
    for d in range(1, order + 1):
        hbar0 = j.hbar0_part(d)
        linear = j.linear_hbar_minus1(d)
        report.add(f"Q^{d} hbar^0", not hbar0, value=[str(c) for c in hbar0.c])
        report.add(f"Q^{d} P/hbar", not linear, value=linear)
    return report
