from __future__ import annotations

import random

import pytest

from quintic_mirror.algebra.cohomology import (
    COHOM_QQ,
    CohomClass,
    WeightSpec,
    euler_weights,
    invert_unit,
    pair_equiv,
    pair_nonequiv,
    parse_weights,
    to_fixed_point,
)
from quintic_mirror.algebra.rational import HBAR, QQ
from quintic_mirror.algebra.series import HBAR_FUNCTIONS, RATIONALS
from quintic_mirror.errors import DegenerateWeightsError, NonUnitError, WeightParseError


def _cls(*coeffs) -> CohomClass:
    return CohomClass(RATIONALS, tuple(coeffs))


def test_hyperplane_powers_truncate():
    p = CohomClass.hyperplane(RATIONALS)
    assert p * p * p == _cls(0, 0, 0, 1)
    assert not (p * p * p * p)


def test_pairing_of_point_class():
    assert pair_nonequiv(COHOM_QQ.one, _cls(0, 0, 0, 1)) == QQ(5)
    assert pair_nonequiv(_cls(0, 1), _cls(0, 0, 1)) == QQ(5)
    assert pair_nonequiv(COHOM_QQ.one, _cls(0, 1)) == QQ(0)
    assert pair_nonequiv(_cls(1, 1), _cls(0, 0, 1, 1)) == QQ(10)


def test_invert_unit():
    assert invert_unit(_cls(1, 1)) == _cls(1, -1, 1, -1)
    assert invert_unit(_cls(2)) == _cls(QQ(1, 2))
    shifted = CohomClass(HBAR_FUNCTIONS, (HBAR, 1))
    assert invert_unit(shifted) == CohomClass(
        HBAR_FUNCTIONS, (1 / HBAR, -1 / HBAR**2, 1 / HBAR**3, -1 / HBAR**4)
    )
    x = _cls(2, 1, 0, 3)
    assert x * invert_unit(x) == COHOM_QQ.one
    with pytest.raises(NonUnitError):
        invert_unit(_cls(0, 1))


def test_parse_weights(default_weights):
    assert default_weights.as_strings() == ["1/1", "2/1", "3/1", "-1/1", "-5/1"]
    assert parse_weights(" 1/2, 3/2 ,-1,1,-2 ").lambdas[0] == QQ(1, 2)


@pytest.mark.parametrize(
    ("text", "position"),
    [("1,2,,3,-6", 3), ("1,2,x,4,-7", 3), ("1,2,3", 4), ("1/0,2,3,4,-10", 1)],
)
def test_parse_errors_report_position(text, position):
    with pytest.raises(WeightParseError) as info:
        parse_weights(text)
    assert info.value.position == position


def test_weights_must_be_distinct_and_balanced():
    with pytest.raises(DegenerateWeightsError) as info:
        parse_weights("1,1,3,-1,-4")
    assert info.value.pairs == [(1, 2)]
    with pytest.raises(DegenerateWeightsError):
        parse_weights("1,2,3,4,5")
    with pytest.raises(DegenerateWeightsError):
        WeightSpec((1, 2, -3))


def test_euler_weights(default_weights):
    # (1−2)(1−3)(1+1)(1+5)
    assert euler_weights(default_weights)[0] == QQ(24)


def _random_weights(rng: random.Random) -> WeightSpec:
    while True:
        values = [QQ(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(4)]
        values.append(-sum(values, QQ.zero))
        if len(set(values)) == 5:
            return WeightSpec(tuple(values))


@pytest.mark.parametrize(
    ("phi", "psi", "expected"),
    [((1,), (1,), 0), ((0, 1), (0, 0, 1), 5), ((0, 0, 1), (0, 0, 1), 0)],
)
def test_localized_pairing_examples_seeded(phi, psi, expected):
    rng = random.Random(23)
    for _ in range(20):
        w = _random_weights(rng)
        value = pair_equiv(to_fixed_point(_cls(*phi), w), to_fixed_point(_cls(*psi), w), w)
        assert value == QQ(expected)


def test_localization_matches_pairing_seeded():
    rng = random.Random(11)
    for _ in range(100):
        w = _random_weights(rng)
        left_degree = rng.randint(0, 3)
        phi = _cls(*[QQ(rng.randint(-5, 5)) for _ in range(left_degree + 1)])
        psi = _cls(*[QQ(rng.randint(-5, 5)) for _ in range(3 - left_degree + 1)])
        localized = pair_equiv(to_fixed_point(phi, w), to_fixed_point(psi, w), w)
        assert localized == pair_nonequiv(phi, psi)


def _random_class(rng: random.Random, degree: int) -> CohomClass:
    return _cls(*[QQ(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(degree + 1)])


def test_restriction_is_multiplicative_seeded():
    rng = random.Random(41)
    for _ in range(100):
        w = _random_weights(rng)
        left_degree = rng.randint(0, 3)
        phi = _random_class(rng, left_degree)
        psi = _random_class(rng, rng.randint(0, 3 - left_degree))
        assert to_fixed_point(phi * psi, w) == to_fixed_point(phi, w) * to_fixed_point(psi, w)


def test_pairing_symmetric_and_bilinear_seeded():
    rng = random.Random(43)
    for _ in range(100):
        phi, chi, psi = (_random_class(rng, 3) for _ in range(3))
        a = QQ(rng.randint(-7, 7), rng.randint(1, 4))
        assert pair_nonequiv(phi, psi) == pair_nonequiv(psi, phi)
        combined = phi * _cls(a) + chi
        assert pair_nonequiv(combined, psi) == a * pair_nonequiv(phi, psi) + pair_nonequiv(chi, psi)


def test_weights_accept_decimals_and_reject_nested_fractions():
    assert parse_weights("0.5,3/2,-1,1,-2").lambdas[0] == QQ(1, 2)
    with pytest.raises(WeightParseError) as info:
        parse_weights("1,1/2/3,3,4,-8")
    assert info.value.position == 2
