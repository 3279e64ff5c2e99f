from __future__ import annotations

import random
from math import factorial

import pytest

from quintic_mirror.algebra.rational import HBAR, QQ
from quintic_mirror.algebra.series import (
    HBAR_FUNCTIONS,
    RATIONALS,
    TruncSeries,
    series_compose_qshift,
    series_exp,
    series_invert,
    series_pow,
    solve_shift_inverse,
)
from quintic_mirror.errors import InvalidSubstitutionError, NonUnitError, RingMismatchError


def _q(order: int) -> TruncSeries:
    return TruncSeries.monomial(RATIONALS, 1, (1, 0), order)


def _random_series(rng: random.Random, q_order: int, z_order: int | None = None) -> TruncSeries:
    coeffs = {}
    for a in range(q_order + 1):
        for b in range((z_order or 0) + 1):
            coeffs[(a, b)] = QQ(rng.randint(-9, 9), rng.randint(1, 5))
    coeffs[(0, 0)] = QQ(rng.choice([-3, -2, -1, 1, 2, 3]), rng.randint(1, 4))
    return TruncSeries(RATIONALS, coeffs, q_order, z_order)


def test_product_keeps_smaller_truncation():
    a = TruncSeries.from_coefficients(RATIONALS, [1, 1, 1, 1], 3)
    b = TruncSeries.from_coefficients(RATIONALS, [1, 2, 3, 4, 5, 6], 5)
    product = a * b
    assert product.q_order == 3
    assert product.q_coefficients() == [QQ(1), QQ(3), QQ(6), QQ(10)]


def test_geometric_series_inverse():
    one_minus_q = TruncSeries.from_coefficients(RATIONALS, [1, -1], 6)
    assert series_invert(one_minus_q).q_coefficients() == [QQ(1)] * 7


def test_exp_of_q():
    assert series_exp(_q(6)).q_coefficients() == [QQ(1, factorial(n)) for n in range(7)]


def test_pow_matches_binomial():
    one_plus_q = TruncSeries.from_coefficients(RATIONALS, [1, 1], 4)
    assert series_pow(one_plus_q, 4).q_coefficients() == [QQ(c) for c in (1, 4, 6, 4, 1)]


def test_qshift_composition():
    # q·e^{q}
    composed = series_compose_qshift(_q(5), _q(5))
    assert composed.q_coefficients() == [QQ(0)] + [QQ(1, factorial(n - 1)) for n in range(1, 6)]


def test_shift_inverse_is_lambert_series():
    g_hat = solve_shift_inverse(_q(5))
    expected = [QQ(0)] + [-QQ((-n) ** (n - 1), factorial(n)) for n in range(1, 6)]
    assert g_hat.q_coefficients() == expected
    assert (g_hat + series_compose_qshift(_q(5), g_hat)).is_zero()


def test_invert_round_trip_seeded():
    rng = random.Random(20240601)
    for _ in range(100):
        a = _random_series(rng, 6)
        one = TruncSeries.constant(RATIONALS, 1, 6)
        assert a * series_invert(a) == one


def test_invert_two_variable_seeded():
    rng = random.Random(7)
    for _ in range(100):
        a = _random_series(rng, 3, 2)
        one = TruncSeries.constant(RATIONALS, 1, 3, 2)
        assert a * series_invert(a) == one


def test_z_bound_truncates():
    x = TruncSeries(RATIONALS, {(0, 1): 1, (1, 0): 1}, 3, 2)
    square = x * x
    assert square.coefficient(0, 2) == QQ(1)
    assert square.coefficient(1, 1) == QQ(2)
    cube = square * x
    assert cube.coefficient(0, 3) == QQ(0)
    assert cube.coefficient(1, 2) == QQ(3)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        TruncSeries.constant(RATIONALS, 1, 3) + TruncSeries.constant(HBAR_FUNCTIONS, 1, 3)
    with pytest.raises(RingMismatchError):
        TruncSeries(RATIONALS, {(0, 0): HBAR}, 2)


def test_invert_needs_unit_constant():
    with pytest.raises(NonUnitError):
        series_invert(_q(3))


def test_exp_rejects_constant_term():
    with pytest.raises(InvalidSubstitutionError):
        series_exp(TruncSeries.constant(RATIONALS, 1, 3))


def test_hbar_coefficients():
    x = TruncSeries.from_coefficients(HBAR_FUNCTIONS, [1, 1 / HBAR], 3)
    inverse = series_invert(x)
    assert inverse.coefficient(1) == -1 / HBAR
    assert inverse.coefficient(2) == 1 / HBAR**2


def test_ring_axioms_seeded():
    rng = random.Random(314)
    for _ in range(100):
        a, b, c = (_random_series(rng, 3, 2) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a - a).is_zero()


def _random_shift(rng: random.Random, q_order: int) -> TruncSeries:
    coeffs = [0] + [QQ(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(q_order)]
    return TruncSeries.from_coefficients(RATIONALS, coeffs, q_order)


def test_qshift_round_trip_seeded():
    rng = random.Random(2718)
    for _ in range(100):
        a = _random_series(rng, 5)
        g = _random_shift(rng, 5)
        g_hat = solve_shift_inverse(g)
        assert series_compose_qshift(series_compose_qshift(a, g), g_hat) == a


def test_inverse_of_f0_both_paths():
    f0 = [1, 120, 113400, 168168000]
    by_division = series_invert(TruncSeries.from_coefficients(RATIONALS, f0, 3))
    with_z = TruncSeries(RATIONALS, {(d, 0): c for d, c in enumerate(f0)}, 3, 0)
    as_two_variable = series_invert(with_z)
    assert by_division.coefficient(1) == QQ(-120)
    for d in range(4):
        assert as_two_variable.coefficient(d, 0) == by_division.coefficient(d)
