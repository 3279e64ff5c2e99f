from __future__ import annotations

import logging

import pytest

from quintic_mirror.algebra.rational import QQ
from quintic_mirror.algebra.series import RATIONALS, TruncSeries
from quintic_mirror.errors import NormalizationError
from quintic_mirror.quintic.hypergeom import i_series, i_series_equivariant
from quintic_mirror.quintic.mirror import (
    MirrorMap,
    apply_mirror,
    build_mirror_map,
    j_series,
    mirror_coordinate,
    verify_asymptotics,
    yukawa,
)


def test_mirror_map_exponent():
    m = build_mirror_map(2)
    assert m.g.coefficient(0) == QQ(0)
    assert m.g.coefficient(1) == QQ(770)


def test_mirror_coordinate_and_inverse():
    forward, inverse = mirror_coordinate(3)
    assert forward.coefficient(1) == QQ(1)
    assert forward.coefficient(2) == QQ(770)
    assert inverse.coefficient(1) == QQ(1)
    assert inverse.coefficient(2) == QQ(-770)


def test_yukawa_coupling():
    k = yukawa(j_series(3))
    assert k.q_coefficients() == [QQ(5), QQ(2875), QQ(4876875), QQ(8564575000)]


def test_j_series_asymptotics():
    report = verify_asymptotics(8)
    assert report.passed, report.failures()


def test_identity_map_leaves_i_series_unnormalized():
    with pytest.raises(NormalizationError):
        apply_mirror(i_series(2), MirrorMap.identity(2))


def test_mirror_map_validation():
    with pytest.raises(NormalizationError):
        MirrorMap(
            TruncSeries.from_coefficients(RATIONALS, [1, 1], 2),
            TruncSeries.constant(RATIONALS, 1, 2),
        )
    with pytest.raises(ValueError):
        build_mirror_map(0)


def test_mirror_transform_commutes_with_truncation():
    assert j_series(5).z_j.truncate(3) == j_series(3).z_j


def test_localized_transform_commutes_with_truncation(recursion_weights):
    longer = apply_mirror(i_series_equivariant(3, recursion_weights), build_mirror_map(3))
    shorter = apply_mirror(i_series_equivariant(2, recursion_weights), build_mirror_map(2))
    for long_component, short_component in zip(longer.components, shorter.components):
        assert long_component.truncate(2) == short_component


def test_mirror_map_logs_its_first_coefficient(caplog):
    with caplog.at_level(logging.DEBUG, logger="quintic_mirror.quintic.mirror"):
        build_mirror_map(1)
    assert "g_1 = 770" in caplog.text
