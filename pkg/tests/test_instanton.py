from __future__ import annotations

import random

import pytest

from quintic_mirror.algebra.rational import QQ
from quintic_mirror.algebra.series import RATIONALS, TruncSeries
from quintic_mirror.errors import IntegralityError, MalformedCouplingError
from quintic_mirror.quintic.instanton import (
    gw_from_yukawa,
    instanton_numbers,
    invert_multicover,
    mobius,
    multicover_sum,
    resum_check,
)
from quintic_mirror.quintic.schubert import count_lines_on_quintic


@pytest.mark.parametrize(("n", "value"), [(1, 1), (2, -1), (4, 0), (6, 1), (30, -1), (12, 0)])
def test_mobius(n, value):
    assert mobius(n) == value


def test_first_three_instanton_numbers():
    rows = instanton_numbers(3)
    assert [row.n_d for row in rows] == [2875, 609250, 317206375]
    assert rows[0].n_d == count_lines_on_quintic()
    assert rows[1].N_d == QQ(4876875, 8)
    assert rows[1].to_dict() == {"d": 2, "N_d": "4876875/8", "n_d": "609250"}


def test_degree_zero_is_empty():
    assert instanton_numbers(0) == []


def test_multicover_round_trip_seeded():
    rng = random.Random(3)
    for _ in range(100):
        n = [rng.randint(-1000, 1000) for _ in range(rng.randint(1, 12))]
        assert invert_multicover(multicover_sum(n)) == n


def test_non_integral_counts_raise():
    with pytest.raises(IntegralityError) as info:
        invert_multicover([QQ(1, 2)])
    assert info.value.degree == 1


def test_yukawa_must_start_with_five():
    with pytest.raises(MalformedCouplingError):
        gw_from_yukawa(TruncSeries.from_coefficients(RATIONALS, [4, 2875], 1))


def test_resum():
    k = resum_check([2875, 609250], 2)
    assert k.q_coefficients() == [QQ(5), QQ(2875), QQ(2875 + 8 * 609250)]


@pytest.mark.slow
def test_instanton_numbers_through_ten():
    rows = instanton_numbers(10)
    assert all(row.n_d > 0 for row in rows)
    assert rows[3].n_d == 242467530000
    assert rows[4].n_d == 229305888887625
