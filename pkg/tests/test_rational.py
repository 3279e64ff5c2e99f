from __future__ import annotations

import pytest

from quintic_mirror.algebra.rational import (
    HBAR,
    QQ,
    coefficient_at_infinity,
    evaluate,
    format_rational,
    hbar_degree,
    laurent_at_infinity,
    laurent_at_zero,
    negate_hbar,
    rational,
    split_polynomial,
)
from quintic_mirror.errors import NonUnitError


@pytest.mark.parametrize(
    ("value", "expected"),
    [(QQ(2875), "2875/1"), (QQ(-3, 6), "-1/2"), ("15625/6", "15625/6"), (0, "0/1")],
)
def test_format_rational(value, expected):
    assert format_rational(rational(value)) == expected


def test_laurent_at_zero():
    assert laurent_at_zero(1 / (HBAR * (1 - HBAR)), 2) == {-1: QQ(1), 0: QQ(1), 1: QQ(1)}


def test_laurent_at_infinity():
    f = HBAR**2 / (HBAR - 1)
    assert hbar_degree(f) == 1
    assert laurent_at_infinity(f, 3) == {1: QQ(1), 0: QQ(1), -1: QQ(1)}
    assert coefficient_at_infinity(f, -1) == QQ(1)
    assert coefficient_at_infinity(1 / HBAR**2, 0) == QQ(0)


def test_split_polynomial():
    polynomial, proper = split_polynomial(HBAR**2 / (HBAR - 1))
    assert polynomial == HBAR.numer + 1
    assert proper == 1 / (HBAR - 1)


def test_negate_hbar():
    assert negate_hbar((HBAR + 2) / (HBAR**2 - 3 * HBAR)) == (2 - HBAR) / (HBAR**2 + 3 * HBAR)


def test_evaluate_at_pole():
    assert evaluate(1 / (HBAR - 1), 3) == QQ(1, 2)
    with pytest.raises(NonUnitError):
        evaluate(1 / (HBAR - 1), 1)
