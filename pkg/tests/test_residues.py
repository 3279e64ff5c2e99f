from __future__ import annotations

import random

import pytest

from quintic_mirror.algebra.rational import (
    HBAR,
    HBAR_RING,
    QQ,
    linear,
    poly_from_coeffs,
    product,
    ratfunc,
)
from quintic_mirror.algebra.residues import FactoredFraction, residue_at_order, residue_simple
from quintic_mirror.errors import PoleMultiplicityError, TruncationError


def test_simple_residues():
    f = 1 / ((HBAR - 1) * (HBAR - 2))
    assert residue_simple(f, 1) == QQ(-1)
    assert residue_simple(f, 2) == QQ(1)


def test_simple_residue_rejects_double_pole():
    with pytest.raises(PoleMultiplicityError) as info:
        residue_simple(1 / (HBAR - 1) ** 2, 1)
    assert info.value.order == 2


def test_simple_residue_rejects_regular_point():
    with pytest.raises(PoleMultiplicityError) as info:
        residue_simple(1 / (HBAR - 1), 3)
    assert info.value.order == 0


def test_residue_at_double_pole():
    f = FactoredFraction((QQ(1),), ((QQ(0), 2), (QQ(1), 1)))
    assert residue_at_order(f, QQ(0), 2) == QQ(-1)
    assert residue_at_order(f, QQ(1), 2) == QQ(1)
    assert residue_at_order(f, QQ(5), 2) == QQ(0)


def test_truncation_too_shallow():
    f = FactoredFraction((QQ(1),), ((QQ(0), 3),))
    with pytest.raises(TruncationError):
        residue_at_order(f, QQ(0), 2)


def test_factored_agrees_with_simple_seeded():
    rng = random.Random(31)
    for _ in range(100):
        roots = rng.sample(range(1, 21), rng.randint(1, 4))
        numerator = [QQ(rng.randint(1, 9)) for _ in range(len(roots))]
        f = ratfunc(
            poly_from_coeffs(numerator),
            product([linear(-root) for root in roots], HBAR_RING.one),
        )
        factored = FactoredFraction(tuple(numerator), tuple((QQ(root), 1) for root in roots))
        for root in roots:
            assert residue_at_order(factored, QQ(root), 1) == residue_simple(f, root)


def test_residues_of_proper_fraction_sum_to_zero_seeded():
    rng = random.Random(99)
    for _ in range(100):
        roots = rng.sample(range(-10, 11), rng.randint(2, 4))
        poles = tuple((QQ(root), rng.randint(1, 3)) for root in roots)
        total_order = sum(mult for _, mult in poles)
        numerator = tuple(QQ(rng.randint(-5, 5), rng.randint(1, 3)) for _ in range(total_order - 1))
        f = FactoredFraction(numerator, poles)
        residues = sum((residue_at_order(f, center, mult) for center, mult in poles), QQ.zero)
        assert residues == QQ.zero
