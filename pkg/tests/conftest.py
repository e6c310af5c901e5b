# tests/conftest.py
import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from services.core import RngStream  # noqa: E402


class ConstantRng(RngStream):
    """Every uniform draw returns the same value."""

    def __init__(self, value):
        super().__init__(0)
        self.value = value

    def uniform(self, size=None):
        if size is None:
            return self.value
        return np.full(size, self.value, dtype=float)


class ZeroNormalRng(RngStream):
    def normal(self, size=None):
        return 0.0 if size is None else np.zeros(size)


@pytest.fixture
def constant_rng():
    return ConstantRng


@pytest.fixture
def zero_normal_rng():
    return ZeroNormalRng(0)


@pytest.fixture(autouse=True)
def _no_ambient_seed(monkeypatch):
    monkeypatch.delenv('METABENCH_SEED', raising=False)
