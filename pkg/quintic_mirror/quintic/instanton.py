from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Any, Sequence

from sympy import divisors, factorint

from quintic_mirror.algebra.rational import QQ, Rational, as_int, is_integral
from quintic_mirror.algebra.series import RATIONALS, TruncSeries
from quintic_mirror.errors import ConsistencyError, IntegralityError, MalformedCouplingError
from quintic_mirror.quintic.mirror import j_series, yukawa
from quintic_mirror.reports import exact

logger = logging.getLogger(__name__)

YUKAWA_CONSTANT = 5


@dataclass(frozen=True)
class InstantonRow:
    d: int
    N_d: Rational
    n_d: int

    def to_dict(self) -> dict[str, Any]:
        return {"d": self.d, "N_d": exact(QQ.convert(self.N_d)), "n_d": str(self.n_d)}


def mobius(n: int) -> int:
    if n < 1:
        raise ValueError("the Möbius function is defined on positive integers")
    exponents = factorint(n)
    if any(power > 1 for power in exponents.values()):
        return 0
    return -1 if len(exponents) % 2 else 1


def gw_from_yukawa(k: TruncSeries) -> list[Rational]:
    """N_d = K_d / d³, indexed from d = 1."""
    if k.coefficient(0) != QQ(YUKAWA_CONSTANT):
        raise MalformedCouplingError(
            f"Yukawa coupling must start with {YUKAWA_CONSTANT}, got {k.coefficient(0)}",
            constant=k.coefficient(0),
        )
    return [k.coefficient(d) / QQ(d**3) for d in range(1, k.q_order + 1)]


def multicover_sum(n: Sequence[Any]) -> list[Rational]:
    """N_d = Σ_{m|d} n_{d/m} / m³, the forward direction."""
    out = []
    for d in range(1, len(n) + 1):
        out.append(sum((QQ.convert(n[d // m - 1]) / QQ(m**3) for m in divisors(d)), QQ.zero))
    return out


def invert_multicover(N: Sequence[Any]) -> list[int]:
    """n_d = Σ_{m|d} μ(m) N_{d/m} / m³; every result must be an integer."""
    out = []
    for d in range(1, len(N) + 1):
        value = sum(
            (QQ(mobius(m), m**3) * QQ.convert(N[d // m - 1]) for m in divisors(d)),
            QQ.zero,
        )
        if not is_integral(value):
            raise IntegralityError(d, value)
        out.append(as_int(value))
    return out


def resum_check(n: Sequence[int], q_order: int) -> TruncSeries:
    """5 + Σ_d n_d d³ q^d / (1 − q^d), truncated."""
    coeffs = [QQ.zero] * (q_order + 1)
    coeffs[0] = QQ(YUKAWA_CONSTANT)
    for d, count in enumerate(n, start=1):
        if d > q_order or not count:
            continue
        for multiple in range(d, q_order + 1, d):
            coeffs[multiple] += QQ(count * d**3)
    return TruncSeries.from_coefficients(RATIONALS, coeffs, q_order)


def instanton_table(k: TruncSeries) -> list[InstantonRow]:
    N = gw_from_yukawa(k)
    n = invert_multicover(N)
    return [InstantonRow(d, value, count) for d, (value, count) in enumerate(zip(N, n), start=1)]


def instanton_numbers(max_degree: int) -> list[InstantonRow]:
    """The full pipeline: I-series, mirror map, Yukawa coupling, multiple covers."""
    if max_degree < 0:
        raise ValueError("max_degree must be non-negative")
    if max_degree == 0:
        return []
    k = yukawa(j_series(max_degree))
    rows = instanton_table(k)
    if resum_check([row.n_d for row in rows], max_degree) != k:
        raise ConsistencyError("resummed Yukawa coupling does not reproduce K", max_degree=max_degree)
    logger.info("instanton numbers computed through degree %s", max_degree)
    return rows
