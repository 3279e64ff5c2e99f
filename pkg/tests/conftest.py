from __future__ import annotations

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from quintic_mirror.algebra.cohomology import WeightSpec, parse_weights  # noqa: E402
from quintic_mirror.config import DEFAULT_LAMBDAS, DEFAULT_RECURSION_LAMBDAS  # noqa: E402


@pytest.fixture
def default_weights() -> WeightSpec:
    return parse_weights(DEFAULT_LAMBDAS)


@pytest.fixture
def recursion_weights() -> WeightSpec:
    return parse_weights(DEFAULT_RECURSION_LAMBDAS)
