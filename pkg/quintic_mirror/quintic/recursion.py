"""Fixed-point recursion, polynomiality and uniqueness for localized series.

A localized solution Z_α (α = 0..4, one per fixed point) obeys

    Z_α,d = R_α,d(ħ)/ħ^d + Σ_{β≠α} Σ_{m≤d} C_α^β(m)/(λ_α−λ_β+mħ) · Z_β,d−m((λ_β−λ_α)/m)

with deg R_α,d ≤ d. The coefficients C are residues of Z_α at the simple
poles ħ = (λ_β−λ_α)/m; everything else is initial data. Indices α, β are
0-based in code and 1-based in reports.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Any, Mapping, Sequence

from quintic_mirror.algebra.cohomology import (
    FixedPointClass,
    WeightSpec,
    euler_weights,
    pair_equiv,
)
from quintic_mirror.algebra.linsolve import LinearSystem, solve_exact
from quintic_mirror.algebra.rational import (
    HBAR,
    HBAR_FIELD,
    HBAR_GEN,
    HBAR_RING,
    QQ,
    PolyH,
    RatFuncH,
    Rational,
    coefficient_at_infinity,
    evaluate,
    is_polynomial,
    laurent_at_zero,
    linear,
    negate_hbar,
    split_polynomial,
)
from quintic_mirror.algebra.residues import residue_simple
from quintic_mirror.algebra.series import HBAR_FUNCTIONS, TruncSeries, series_compose_qshift, series_exp
from quintic_mirror.errors import (
    DegenerateWeightsError,
    InsufficientZOrderError,
    NoPolynomialSolutionError,
    StructureError,
    TheoremViolationError,
)
from quintic_mirror.quintic.hypergeom import LocalizedSeries, i_series_equivariant
from quintic_mirror.quintic.mirror import MirrorMap, apply_mirror, build_mirror_map
from quintic_mirror.reports import VerificationReport

logger = logging.getLogger(__name__)

# per fixed point, the asymptotic freedom A + B/ħ at each degree
FREE_PER_POINT = 2


# genericity ---------------------------------------------------------------


@dataclass(frozen=True)
class GenericityCertificate:
    w: WeightSpec
    d_max: int
    checks: tuple[str, ...]

    def poles(self, alpha: int) -> list[tuple[int, int, Rational]]:
        return _poles(self.w, alpha, self.d_max)


def _poles(w: WeightSpec, alpha: int, d_max: int) -> list[tuple[int, int, Rational]]:
    return [
        (beta, m, (w[beta] - w[alpha]) / QQ(m))
        for m in range(1, d_max + 1)
        for beta in range(len(w.lambdas))
        if beta != alpha
    ]


def _label(alpha: int, beta: int, m: int) -> str:
    return f"(l{beta + 1}-l{alpha + 1})/{m}"


def validate_weights(w: WeightSpec | Sequence[Any], d_max: int) -> GenericityCertificate:
    """Certify that every recursion pole up to degree ``d_max`` is simple and
    that reconstruct never evaluates a coefficient at one of its poles."""
    if not isinstance(w, WeightSpec):
        w = WeightSpec(tuple(QQ.convert(x) for x in w))
    n = len(w.lambdas)
    collisions: list[str] = []

    for alpha in range(n):
        seen: dict[Rational, tuple[int, int]] = {}
        for beta, m, pole in _poles(w, alpha, d_max):
            if pole in seen:
                other_beta, other_m = seen[pole]
                collisions.append(
                    f"alpha={alpha + 1}: {_label(alpha, other_beta, other_m)} = "
                    f"{_label(alpha, beta, m)} = {pole}"
                )
            else:
                seen[pole] = (beta, m)
    if collisions:
        raise DegenerateWeightsError(
            f"recursion poles collide up to degree {d_max}: {collisions[0]}", pairs=collisions
        )

    # Z_β,j is evaluated at (λ_β−λ_α)/m whenever m + j ≤ d_max
    for alpha in range(n):
        for beta, m, point in _poles(w, alpha, d_max):
            for gamma, j, pole in _poles(w, beta, d_max - m):
                if point == pole:
                    collisions.append(
                        f"{_label(alpha, beta, m)} = {_label(beta, gamma, j)} = {point}"
                    )
    if collisions:
        raise DegenerateWeightsError(
            f"recursion evaluates a coefficient at its own pole: {collisions[0]}",
            pairs=collisions,
        )

    # numerator zeros −5λ_α/k (k ≤ 5m) must not cancel a pole of Z_α,m
    for alpha, lam in enumerate(w):
        for beta, j, pole in _poles(w, alpha, d_max):
            for k in range(1, 5 * d_max + 1):
                if -5 * lam / QQ(k) == pole:
                    collisions.append(f"alpha={alpha + 1}: zero -5*l{alpha + 1}/{k} = {_label(alpha, beta, j)}")
    if collisions:
        raise DegenerateWeightsError(
            f"a numerator zero cancels a recursion pole: {collisions[0]}", pairs=collisions
        )

    checks = (
        f"{n * (n - 1) * d_max} poles distinct per fixed point",
        "no evaluation point is a pole of the evaluated coefficient",
        "no numerator zero cancels a pole",
    )
    return GenericityCertificate(w, d_max, checks)


# recursion ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class RecursionData:
    C: Mapping[tuple[int, int, int], Rational]
    R: Mapping[tuple[int, int], PolyH]
    w: WeightSpec
    d_max: int

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RecursionData):
            return NotImplemented
        return (
            self.w == other.w
            and self.d_max == other.d_max
            and _nonzero(self.C) == _nonzero(other.C)
            and _nonzero(self.R) == _nonzero(other.R)
        )

    __hash__ = None  # type: ignore[assignment]

    def coefficient(self, alpha: int, beta: int, m: int) -> Rational:
        return self.C.get((alpha, beta, m), QQ.zero)

    def rows(self) -> list[dict[str, Any]]:
        return [
            {"alpha": a + 1, "beta": b + 1, "m": m, "C": value}
            for (a, b, m), value in sorted(self.C.items())
        ]


def _nonzero(mapping: Mapping[Any, Any]) -> dict[Any, Any]:
    return {key: value for key, value in mapping.items() if value}


def _recursive_part(
    alpha: int,
    d: int,
    C: Mapping[tuple[int, int, int], Rational],
    values: Sequence[Sequence[RatFuncH]],
    w: WeightSpec,
) -> RatFuncH:
    """Σ_{β≠α} Σ_{m≤d} C_α^β(m)/(λ_α−λ_β+mħ) · Z_β,d−m((λ_β−λ_α)/m)."""
    lam = w[alpha]
    total = HBAR_FIELD.zero
    for beta, other in enumerate(w):
        if beta == alpha:
            continue
        for m in range(1, d + 1):
            c = C.get((alpha, beta, m))
            if not c:
                continue
            value = evaluate(values[beta][d - m], (other - lam) / QQ(m))
            if value:
                total += HBAR_FIELD(c * value) / HBAR_FIELD.new(linear(lam - other, m))
    return total


def _initial_polynomial(remainder: RatFuncH, alpha: int, d: int) -> PolyH:
    scaled = remainder * HBAR**d
    if not is_polynomial(scaled) or (scaled and scaled.numer.degree() > d):
        raise StructureError(
            f"alpha={alpha + 1}, q^{d}: remainder is not hbar^-{d} times a polynomial of degree <= {d}",
            alpha=alpha + 1,
            d=d,
            remainder=remainder,
        )
    if not scaled:
        return HBAR_RING.zero
    return scaled.numer.mul_ground(QQ.one / scaled.denom.LC)


def extract_recursion(z: LocalizedSeries, w: WeightSpec, d_max: int) -> RecursionData:
    """Read C_α^β(m) off as residues, in increasing m, then the initial data R."""
    validate_weights(w, d_max)
    if z.q_order < d_max:
        raise ValueError(f"series known to q^{z.q_order}, recursion requested to q^{d_max}")
    n = len(w.lambdas)
    values = [[z.coefficient(alpha, d) for d in range(d_max + 1)] for alpha in range(n)]
    C: dict[tuple[int, int, int], Rational] = {}
    R: dict[tuple[int, int], PolyH] = {}
    for d in range(d_max + 1):
        for alpha, lam in enumerate(w):
            known = _recursive_part(alpha, d, C, values, w)
            remainder = values[alpha][d] - known
            for beta, other in enumerate(w):
                if beta == alpha or d == 0:
                    continue
                pole = (other - lam) / QQ(d)
                if remainder.denom.evaluate(HBAR_GEN, pole):
                    continue
                C[(alpha, beta, d)] = QQ(d) * residue_simple(remainder, pole)
        for alpha in range(n):
            remainder = values[alpha][d] - _recursive_part(alpha, d, C, values, w)
            R[(alpha, d)] = _initial_polynomial(remainder, alpha, d)
        logger.debug("recursion coefficients extracted at degree %s", d)
    return RecursionData(C, R, w, d_max)


def reconstruct(data: RecursionData, d_max: int | None = None) -> LocalizedSeries:
    d_max = data.d_max if d_max is None else d_max
    n = len(data.w.lambdas)
    values: list[list[RatFuncH]] = [[] for _ in range(n)]
    for d in range(d_max + 1):
        for alpha in range(n):
            initial = HBAR_FIELD.new(data.R.get((alpha, d), HBAR_RING.zero)) / HBAR**d
            values[alpha].append(initial + _recursive_part(alpha, d, data.C, values, data.w))
    return LocalizedSeries(
        data.w,
        tuple(TruncSeries.from_coefficients(HBAR_FUNCTIONS, row, d_max) for row in values),
    )


# polynomiality ------------------------------------------------------------


def polynomiality_series(z: LocalizedSeries, q_order: int, z_order: int) -> TruncSeries:
    """⟨Z(q e^{ħz}, ħ), e^{Pz} Z(q, −ħ)⟩ by localization."""
    w = z.weights
    shift = TruncSeries.monomial(HBAR_FUNCTIONS, HBAR, (0, 1), q_order, z_order)
    per_point = []
    for alpha, lam in enumerate(w):
        component = z[alpha].truncate(q_order)
        shifted = series_compose_qshift(component.with_z(z_order), shift)
        weight_exp = series_exp(TruncSeries.monomial(HBAR_FUNCTIONS, lam, (0, 1), q_order, z_order))
        reflected = component.map(negate_hbar).with_z(z_order)
        per_point.append(weight_exp * shifted * reflected)
    unit = FixedPointClass(HBAR_FUNCTIONS, (1,) * len(w.lambdas))
    coeffs = {}
    for a in range(q_order + 1):
        for b in range(z_order + 1):
            values = FixedPointClass(HBAR_FUNCTIONS, tuple(s.coefficient(a, b) for s in per_point))
            coeffs[(a, b)] = pair_equiv(values, unit, w)
    return TruncSeries(HBAR_FUNCTIONS, coeffs, q_order, z_order)


def pairing_coefficient(
    values: Sequence[Sequence[RatFuncH]], w: WeightSpec, d: int, l: int
) -> RatFuncH:
    """The q^d z^l coefficient of the polynomiality series, term by term."""
    total = HBAR_FIELD.zero
    for alpha, (lam, e) in enumerate(zip(w, euler_weights(w))):
        inner = HBAR_FIELD.zero
        for k in range(d + 1):
            inner += (HBAR * k + lam) ** l * values[alpha][k] * negate_hbar(values[alpha][d - k])
        total += inner * (QQ(5) * lam / (e * QQ(factorial(l))))
    return total


def verify_polynomiality(
    z: LocalizedSeries, w: WeightSpec, q_order: int, z_order: int
) -> VerificationReport:
    """Every coefficient of the pairing series must be a polynomial in ħ.

    This is an identity for any distinct weights; no genericity certificate is
    needed.
    """
    report = VerificationReport(
        "verify-polynomiality",
        {"q_order": q_order, "z_order": z_order, "lambdas": w.as_strings()},
    )
    series = polynomiality_series(z, q_order, z_order)
    for d in range(q_order + 1):
        for l in range(z_order + 1):
            _, pole_part = split_polynomial(series.coefficient(d, l))
            report.add(f"q^{d} z^{l}", not pole_part, pole_part=pole_part if pole_part else None)
    return report


# mirror covariance --------------------------------------------------------


def covariance_report(
    z: LocalizedSeries, transformed: LocalizedSeries, w: WeightSpec, z_order: int
) -> VerificationReport:
    d_max = min(z.q_order, transformed.q_order)
    report = VerificationReport(
        "verify-covariance", {"q_order": d_max, "z_order": z_order, "lambdas": w.as_strings()}
    )
    before = extract_recursion(z, w, d_max)
    after = extract_recursion(transformed, w, d_max)
    keys = sorted(set(before.C) | set(after.C))
    for alpha, beta, m in keys:
        left, right = before.coefficient(alpha, beta, m), after.coefficient(alpha, beta, m)
        report.add(f"C[{alpha + 1},{beta + 1}]({m})", left == right, before=left, after=right)
    report.extend(verify_polynomiality(transformed, w, d_max, z_order), prefix="polynomiality ")
    return report


def mirror_transform_localized(
    z: LocalizedSeries, m: MirrorMap, w: WeightSpec, z_order: int | None = None
) -> LocalizedSeries:
    """Divide by f₀, apply e^{−λ_α g/ħ} and shift coordinates; the result must
    keep the recursion coefficients and stay polynomial."""
    transformed = apply_mirror(z, m)
    report = covariance_report(z, transformed, w, z.q_order if z_order is None else z_order)
    if not report.passed:
        raise TheoremViolationError(
            "mirror transform broke the recursion or polynomiality",
            failures=[entry.label for entry in report.failures()],
        )
    return transformed


def verify_covariance(w: WeightSpec, q_order: int, z_order: int) -> VerificationReport:
    z = i_series_equivariant(q_order, w)
    transformed = apply_mirror(z, build_mirror_map(max(q_order, 1)))
    return covariance_report(z, transformed, w, z_order)


# uniqueness ---------------------------------------------------------------


Anchors = Mapping[tuple[int, int], tuple[Any, Any]]


def anchors_from(z: LocalizedSeries, d_max: int) -> dict[tuple[int, int], tuple[Rational, Rational]]:
    """The ħ⁰ and ħ^{−1} coefficients at ħ = ∞ of every Z_α,d, d ≥ 1."""
    return {
        (alpha, d): (
            coefficient_at_infinity(z.coefficient(alpha, d), 0),
            coefficient_at_infinity(z.coefficient(alpha, d), -1),
        )
        for alpha in range(len(z.weights.lambdas))
        for d in range(1, d_max + 1)
    }


def default_z_order(d_max: int) -> int:
    # degree d needs z-powers up to about 5d − 6 before the rank is full
    return max(5 * d_max - 1, 0)


@dataclass
class UniqueSolution:
    series: LocalizedSeries
    nullities: dict[int, int] = field(default_factory=dict)


def solve_unique_with_stats(
    C: Mapping[tuple[int, int, int], Any],
    anchors: Anchors,
    w: WeightSpec,
    d_max: int,
    z_order: int | None = None,
) -> UniqueSolution:
    z_order = default_z_order(d_max) if z_order is None else z_order
    validate_weights(w, d_max)
    C = {key: QQ.convert(value) for key, value in C.items()}
    n = len(w.lambdas)
    point_weights = [QQ(5) * lam / e for lam, e in zip(w, euler_weights(w))]
    values: list[list[RatFuncH]] = [[HBAR_FIELD.one] for _ in range(n)]
    nullities: dict[int, int] = {}

    for d in range(1, d_max + 1):
        known_parts = [_recursive_part(alpha, d, C, values, w) for alpha in range(n)]
        principal = []
        for alpha in range(n):
            # (k, principal part at ħ = 0) for the pieces weighted by (λ_α + kħ)^l
            pieces = [
                (d, laurent_at_zero(known_parts[alpha], 0)),
                (0, laurent_at_zero(negate_hbar(known_parts[alpha]), 0)),
            ]
            for k in range(1, d):
                product = values[alpha][k] * negate_hbar(values[alpha][d - k])
                pieces.append((k, laurent_at_zero(product, 0)))
            principal.append(pieces)
        depth = max([d] + [-power for pieces in principal for _, part in pieces for power in part])

        columns = n * (d + 1)
        matrix: list[list[Rational]] = []
        rhs: list[Rational] = []
        for l in range(z_order + 1):
            for s in range(1, depth + 1):
                row = [QQ.zero] * columns
                target = QQ.zero
                for alpha, lam in enumerate(w):
                    scale = point_weights[alpha] / QQ(factorial(l))
                    for j in range(d + 1):
                        entry = QQ.zero
                        b = d - j - s
                        if 0 <= b <= l:
                            entry += QQ(comb(l, b) * d**b) * lam ** (l - b)
                        if d - j == s:
                            entry += QQ((-1) ** s) * lam**l
                        row[alpha * (d + 1) + j] = scale * entry
                    for k, part in principal[alpha]:
                        acc = QQ.zero
                        for b in range(l + 1):
                            c = part.get(-s - b)
                            if c:
                                acc += QQ(comb(l, b) * k**b) * lam ** (l - b) * c
                        target -= scale * acc
                matrix.append(row)
                rhs.append(target)

        homogeneous = solve_exact(LinearSystem.build(matrix, rhs, columns))
        if not homogeneous.consistent:
            raise NoPolynomialSolutionError(d)
        nullities[d] = homogeneous.nullity
        if homogeneous.nullity > FREE_PER_POINT * n:
            raise InsufficientZOrderError(d, homogeneous.nullity, z_order)

        for alpha in range(n):
            a_value, b_value = anchors.get((alpha, d), (0, 0))
            lead = [QQ.zero] * columns
            lead[alpha * (d + 1) + d] = QQ.one
            matrix.append(lead)
            rhs.append(QQ.convert(a_value))
            sub = [QQ.zero] * columns
            sub[alpha * (d + 1) + d - 1] = QQ.one
            matrix.append(sub)
            rhs.append(QQ.convert(b_value) - coefficient_at_infinity(known_parts[alpha], -1))
        anchored = solve_exact(LinearSystem.build(matrix, rhs, columns))
        if not anchored.consistent:
            raise NoPolynomialSolutionError(d)
        if not anchored.unique:
            raise InsufficientZOrderError(d, anchored.nullity, z_order)

        for alpha in range(n):
            r = anchored.particular[alpha * (d + 1) : (alpha + 1) * (d + 1)]
            initial = HBAR_RING.from_dict({(j,): c for j, c in enumerate(r) if c})
            values[alpha].append(HBAR_FIELD.new(initial) / HBAR**d + known_parts[alpha])
        for l in range(z_order + 1):
            if not is_polynomial(pairing_coefficient(values, w, d, l)):
                raise NoPolynomialSolutionError(d)
        logger.debug("degree %s solved, nullity %s before anchoring", d, nullities[d])

    series = LocalizedSeries(
        w, tuple(TruncSeries.from_coefficients(HBAR_FUNCTIONS, row, d_max) for row in values)
    )
    return UniqueSolution(series, nullities)


def solve_unique(
    C: Mapping[tuple[int, int, int], Any],
    anchors: Anchors,
    w: WeightSpec,
    d_max: int,
    z_order: int | None = None,
) -> LocalizedSeries:
    """The polynomial solution of the recursion with prescribed ħ⁰, ħ^{−1} asymptotics."""
    return solve_unique_with_stats(C, anchors, w, d_max, z_order).series


def verify_uniqueness(w: WeightSpec, q_order: int, z_order: int | None = None) -> VerificationReport:
    z_order = default_z_order(q_order) if z_order is None else z_order
    report = VerificationReport(
        "verify-uniqueness", {"q_order": q_order, "z_order": z_order, "lambdas": w.as_strings()}
    )
    z = i_series_equivariant(q_order, w)
    transformed = apply_mirror(z, build_mirror_map(max(q_order, 1)))
    data = extract_recursion(transformed, w, q_order)
    solution = solve_unique_with_stats(data.C, anchors_from(transformed, q_order), w, q_order, z_order)
    n = len(w.lambdas)
    for d, nullity in sorted(solution.nullities.items()):
        report.add(f"q^{d} nullity", nullity == FREE_PER_POINT * n, nullity=nullity, expected=FREE_PER_POINT * n)
    for alpha in range(n):
        for d in range(q_order + 1):
            same = solution.series.coefficient(alpha, d) == transformed.coefficient(alpha, d)
            report.add(f"alpha={alpha + 1} q^{d}", same)
    return report
