from __future__ import annotations

import random

import pytest

from quintic_mirror.quintic.schubert import (
    SchubertClass,
    chern_polynomial,
    count_lines,
    count_lines_on_cubic_surface,
    count_lines_on_quintic,
    pieri_sigma1,
)


def test_lines_on_quintic():
    assert count_lines_on_quintic() == 2875


def test_lines_on_cubic_surface():
    assert count_lines_on_cubic_surface() == 27


def test_chern_class_of_cubic_bundle():
    assert chern_polynomial(3).as_dict() == {(2, 1): 18, (0, 2): 9}


def test_sigma1_fourth_power_on_g24():
    x = SchubertClass.unit(4)
    for _ in range(4):
        x = pieri_sigma1(x)
    assert x == SchubertClass.basis(4, 2, 2).scale(2)


def test_product_of_special_classes():
    s1 = SchubertClass.basis(5, 1)
    assert s1 * s1 == SchubertClass(5, {(2, 0): 1, (1, 1): 1})
    assert SchubertClass.basis(5, 2) * SchubertClass.basis(5, 1, 1) == SchubertClass.basis(5, 3, 1)


def test_dimension_mismatch():
    with pytest.raises(ValueError):
        count_lines(4, 5)
    with pytest.raises(ValueError):
        SchubertClass.basis(4, 3)


G25_BASIS = [(a, b) for a in range(4) for b in range(a + 1)]


def _random_class(rng: random.Random) -> SchubertClass:
    chosen = rng.sample(G25_BASIS, 3)
    return SchubertClass(5, {partition: rng.randint(-3, 3) for partition in chosen})


def test_degree_of_g25():
    x = SchubertClass.unit(5)
    for _ in range(6):
        x = pieri_sigma1(x)
    assert x == SchubertClass.basis(5, 3, 3).scale(5)


def test_dual_basis():
    for a, b in G25_BASIS:
        for c, d in G25_BASIS:
            if a + b + c + d != 6:
                continue
            product = SchubertClass.basis(5, a, b) * SchubertClass.basis(5, c, d)
            expected = 1 if (c, d) == (3 - b, 3 - a) else 0
            assert product == SchubertClass.basis(5, 3, 3).scale(expected)


def test_ring_laws_seeded():
    rng = random.Random(99)
    for _ in range(100):
        x, y, z = (_random_class(rng) for _ in range(3))
        assert x * y == y * x
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_top_degree_pairs_dual_coefficients_seeded():
    rng = random.Random(12)
    for _ in range(100):
        x, y = _random_class(rng), _random_class(rng)
        expected = sum(x.degree_of((a, b)) * y.degree_of((3 - b, 3 - a)) for a, b in G25_BASIS)
        assert (x * y).degree_of((3, 3)) == expected
