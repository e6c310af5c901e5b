# services/optimizers/base.py
"""
Pieces shared by every optimizer: the objective handed to them, the single
evaluation choke point that charges the FFE budget and records the
convergence trace, and the run record it produces.
"""
import math
from dataclasses import dataclass, field
from typing import Callable, List, NamedTuple, Optional

import numpy as np

from config import COLLAPSE_TOLERANCE
from services.benchmarks import evaluate, evaluate_transformed
from services.core import Bounds, ConfigurationError, uniform_in_bounds


@dataclass(frozen=True)
class Objective:
    function:  Callable[[np.ndarray], float]
    bounds:    Bounds
    dimension: int

    @classmethod
    def from_spec(cls, spec, transform=None, noise_rng=None):
        if transform is None:
            fn = lambda x: evaluate(spec, x, noise_rng)
        else:
            fn = lambda x: evaluate_transformed(spec, transform, x, noise_rng)
        return cls(function=fn, bounds=spec.bounds, dimension=spec.dimension)


class TraceSample(NamedTuple):
    ffe:         int
    best_so_far: float


@dataclass
class RunRecord:
    best_solution:    Optional[np.ndarray]
    best_value:       float
    ffe_used:         int
    terminated_early: bool
    trace:            List[TraceSample] = field(default_factory=list)


class Evaluator:
    """Every objective call goes through here; nothing else touches the budget."""

    def __init__(self, objective, budget, trace_stride):
        self.objective     = objective
        self.budget        = budget
        self.stride        = max(1, int(trace_stride))
        self.best_value    = math.inf
        self.best_solution = None
        self.trace         = []

    def __call__(self, x):
        ffe   = self.budget.charge()
        value = float(self.objective.function(x))
        if value < self.best_value:
            self.best_value    = value
            self.best_solution = np.array(x, dtype=float, copy=True)
        if ffe % self.stride == 0:
            self.trace.append(TraceSample(ffe, self.best_value))
        return value

    def record(self, terminated_early=False):
        used = self.budget.used_ffe
        if used and (not self.trace or self.trace[-1].ffe != used):
            self.trace.append(TraceSample(used, self.best_value))
        return RunRecord(
            best_solution=self.best_solution,
            best_value=self.best_value,
            ffe_used=used,
            terminated_early=terminated_early,
            trace=list(self.trace),
        )


def detect_collapse(population):
    members = np.atleast_2d(np.asarray(population, dtype=float))
    if members.size == 0:
        raise ValueError("population is empty")
    return bool(np.all(np.ptp(members, axis=0) < COLLAPSE_TOLERANCE))


def check_run_preconditions(config, budget):
    if config.population_size < 2:
        raise ConfigurationError(
            f"{config.algorithm}: population_size must be >= 2, got {config.population_size}"
        )
    if budget.max_ffe < config.population_size:
        raise ConfigurationError(
            f"{config.algorithm}: budget of {budget.max_ffe} FFE is below the "
            f"population size {config.population_size}"
        )


def start(objective, config, budget, trace_stride):
    check_run_preconditions(config, budget)
    return Evaluator(objective, budget, trace_stride or config.evals_per_iteration)


def initial_population(objective, rng, size, evaluator):
    """Uniform members plus their values; raises BudgetExhausted like any evaluation."""
    positions = np.vstack([
        uniform_in_bounds(rng, objective.bounds, objective.dimension) for _ in range(size)
    ])
    values = np.empty(size)
    for i in range(size):
        values[i] = evaluator(positions[i])
    return positions, values
