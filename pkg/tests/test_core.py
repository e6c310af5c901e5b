# tests/test_core.py
import numpy as np
import pytest

from services.core import (
    Bounds, BudgetExhausted, ConfigurationError, EvaluationBudget, InvalidBoundsError,
    InvalidDimensionError, RngStream, clamp, derive_seed, uniform_in_bounds,
)


# ── Bounds / clamp ────────────────────────────────────────────────────────────

@pytest.mark.parametrize('x, expected', [
    ([0.0, 0.0], [0.0, 0.0]),
    ([150.0, -150.0], [100.0, -100.0]),
    ([99.9, 100.1], [99.9, 100.0]),
])
def test_clamp_examples(x, expected):
    assert clamp(x, Bounds(-100, 100)).tolist() == expected


def test_clamp_is_idempotent():
    b   = Bounds(-5.12, 5.12)
    rng = RngStream(3)
    x   = 20.0 * rng.signed_uniform(50)
    once = clamp(x, b)
    assert np.array_equal(clamp(once, b), once)
    assert b.contains(once)


def test_degenerate_bounds_rejected():
    with pytest.raises(InvalidBoundsError):
        Bounds(5, 5)
    with pytest.raises(InvalidBoundsError):
        Bounds(1, -1)


def test_bounds_label():
    assert Bounds(-100, 100).label() == '[-100,100]'
    assert Bounds(-1.28, 1.28).label() == '[-1.28,1.28]'
    assert Bounds(-100, 100).width == 200


# ── uniform_in_bounds ─────────────────────────────────────────────────────────

def test_uniform_in_bounds_lower_edge(constant_rng):
    x = uniform_in_bounds(constant_rng(0.0), Bounds(-10, 10), 2)
    assert x.tolist() == [-10.0, -10.0]


def test_uniform_in_bounds_midpoint(constant_rng):
    x = uniform_in_bounds(constant_rng(0.5), Bounds(-10, 10), 2)
    assert x.tolist() == [0.0, 0.0]


def test_uniform_in_bounds_rejects_empty_dimension():
    with pytest.raises(InvalidDimensionError):
        uniform_in_bounds(RngStream(1), Bounds(-1, 1), 0)


def test_uniform_in_bounds_stays_inside():
    rng = RngStream(11)
    b   = Bounds(0.25, 10)
    for _ in range(200):
        x = uniform_in_bounds(rng, b, 7)
        assert x.shape == (7,)
        assert b.contains(x)


# ── Random stream ─────────────────────────────────────────────────────────────

def test_equal_seeds_give_equal_streams():
    a, b = RngStream(42), RngStream(42)
    assert np.array_equal(a.uniform(10), b.uniform(10))
    assert np.array_equal(a.normal((3, 3)), b.normal((3, 3)))
    assert a.integers(0, 100) == b.integers(0, 100)


def test_different_seeds_differ():
    assert not np.array_equal(RngStream(1).uniform(10), RngStream(2).uniform(10))


def test_uniform_range_and_mean():
    u = RngStream(5).uniform(20000)
    assert u.min() >= 0.0 and u.max() < 1.0
    assert abs(u.mean() - 0.5) < 0.01


def test_million_uniform_draws():
    u = RngStream(2018).uniform(1_000_000)
    assert np.array_equal(u, RngStream(2018).uniform(1_000_000))
    assert 0.498 <= u.mean() <= 0.502

    counts, _ = np.histogram(u, bins=10, range=(0.0, 1.0))
    share = counts / u.size
    assert np.all(np.abs(share - 0.1) <= 0.005), share


def test_signed_uniform_range():
    s = RngStream(6).signed_uniform(20000)
    assert s.min() >= -1.0 and s.max() < 1.0
    assert abs(s.mean()) < 0.02


def test_normal_moments():
    z = RngStream(7).normal(20000)
    assert abs(z.mean()) < 0.05
    assert abs(z.std() - 1.0) < 0.05
    assert isinstance(RngStream(7).normal(), float)


def test_derive_seed_is_stable_and_part_sensitive():
    s = derive_seed(2018, 'pso', 'sphere', 'plain', 0)
    assert s == derive_seed(2018, 'pso', 'sphere', 'plain', 0)
    assert s != derive_seed(2018, 'pso', 'sphere', 'plain', 1)
    assert s != derive_seed(2018, 'sphere', 'pso', 'plain', 0)
    assert s != derive_seed(2019, 'pso', 'sphere', 'plain', 0)
    assert 0 <= s < 2 ** 64


# ── Budget ────────────────────────────────────────────────────────────────────

def test_budget_charges_one_at_a_time():
    budget = EvaluationBudget(3)
    assert [budget.charge() for _ in range(3)] == [1, 2, 3]
    assert budget.exhausted
    assert budget.remaining == 0
    with pytest.raises(BudgetExhausted):
        budget.charge()
    assert budget.used_ffe == 3


def test_budget_for_dimension():
    assert EvaluationBudget.for_dimension(30, 1333).max_ffe == 39990


def test_budget_must_be_positive():
    with pytest.raises(ConfigurationError):
        EvaluationBudget(0)
