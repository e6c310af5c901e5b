# services/harness.py
"""
Replicated experiments: every (function, algorithm) cell is run `runs` times
under a budget of budget_per_dim × D evaluations, each run on its own derived
random stream, and summarised as mean / sample SD of the best values.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional

import numpy as np
from joblib import Parallel, delayed

from config import (
    ALGORITHMS, DEFAULT_DIMENSION, DEFAULT_RUNS, FFE_PER_DIMENSION, VARIANTS,
    default_base_seed,
)
from services.benchmarks import FUNCTIONS, get_spec, make_shift_rotate
from services.core import ConfigurationError, EvaluationBudget, RngStream, derive_seed
from services.optimizers import Objective, RunRecord, make_config, run_optimizer


class RunFailure(RuntimeError):
    """Any error escaping a single run, tagged with the cell it happened in."""

    def __init__(self, cell, cause):
        super().__init__(cell, cause)
        self.cell  = cell
        self.cause = cause

    def __str__(self):
        return f"run failed in cell {self.cell}: {self.cause}"


@dataclass
class ExperimentPlan:
    function_ids:   List[str]
    algorithms:     List[str]
    dimension:      int = DEFAULT_DIMENSION
    runs:           int = DEFAULT_RUNS
    budget_per_dim: int = FFE_PER_DIMENSION
    variant:        str = 'plain'
    base_seed:      int = field(default_factory=default_base_seed)
    trace_stride:   Optional[int] = None
    parameters:     Dict[str, dict] = field(default_factory=dict)

    @property
    def max_ffe(self):
        return self.budget_per_dim * self.dimension

    def config_for(self, algorithm):
        return make_config(algorithm, **self.parameters.get(algorithm, {}))

    def validate(self):
        unknown = [f for f in self.function_ids if f not in FUNCTIONS]
        if unknown:
            raise ConfigurationError(f"unknown function(s): {', '.join(unknown)}")
        unknown = [a for a in self.algorithms if a not in ALGORITHMS]
        if unknown:
            raise ConfigurationError(f"unknown algorithm(s): {', '.join(unknown)}")
        if not self.function_ids or not self.algorithms:
            raise ConfigurationError("plan needs at least one function and one algorithm")
        stray = set(self.parameters) - set(ALGORITHMS)
        if stray:
            raise ConfigurationError(f"parameters given for unknown algorithm(s): {sorted(stray)}")
        if self.variant not in VARIANTS:
            raise ConfigurationError(f"variant must be one of {VARIANTS}, got '{self.variant}'")
        if self.runs < 1:
            raise ConfigurationError(f"runs must be >= 1, got {self.runs}")
        if self.dimension < 1:
            raise ConfigurationError(f"dimension must be >= 1, got {self.dimension}")
        if self.trace_stride is not None and self.trace_stride < 1:
            raise ConfigurationError(f"trace_stride must be >= 1, got {self.trace_stride}")
        configs = {a: self.config_for(a) for a in self.algorithms}
        largest = max(c.population_size for c in configs.values())
        if self.max_ffe < largest:
            raise ConfigurationError(
                f"budget {self.max_ffe} FFE is smaller than the largest population ({largest})"
            )
        return configs


@dataclass
class CellSummary:
    function_id:  str
    algorithm:    str
    mean:         float
    sd:           float
    runs:         List[RunRecord]
    seeds:        List[int] = field(default_factory=list)
    fingerprints: List[Optional[str]] = field(default_factory=list)


def summarize(values):
    values = np.asarray(values, dtype=float)
    if values.size == 0:
        raise ValueError("cannot summarize an empty sample")
    mean = float(np.mean(values))
    sd   = float(np.std(values, ddof=1)) if values.size > 1 else 0.0
    return mean, sd


# ── Seeds ─────────────────────────────────────────────────────────────────────

def run_seed(plan, algorithm, function_id, run_index):
    return derive_seed(plan.base_seed, algorithm, function_id, plan.variant, run_index)


def draw_transform(plan, function_id, run_index):
    """The landscape of one run index; identical for every algorithm in that run."""
    spec = get_spec(function_id, plan.dimension)
    rng  = RngStream(derive_seed(plan.base_seed, 'transform', function_id, plan.variant, run_index))
    return make_shift_rotate(rng, spec)


def execute_run(plan, function_id, algorithm, run_index):
    cell = f"{function_id}/{algorithm}/{plan.variant}/run {run_index}"
    try:
        spec      = get_spec(function_id, plan.dimension)
        config    = plan.config_for(algorithm)
        seed      = run_seed(plan, algorithm, function_id, run_index)
        noise_rng = RngStream(derive_seed(plan.base_seed, 'noise', algorithm, function_id,
                                          plan.variant, run_index))
        transform = None
        if plan.variant == 'shift_rotated':
            transform = draw_transform(plan, function_id, run_index)

        objective = Objective.from_spec(spec, transform=transform, noise_rng=noise_rng)
        record = run_optimizer(
            algorithm, objective, config, RngStream(seed),
            EvaluationBudget(plan.max_ffe), trace_stride=plan.trace_stride,
        )
        fingerprint = transform.fingerprint() if transform is not None else None
        return record, seed, fingerprint
    except Exception as e:
        raise RunFailure(cell, f"{type(e).__name__}: {e}") from e


def run_experiment(plan, jobs=1):
    plan.validate()

    tasks = [
        (function_id, algorithm, run_index)
        for function_id in plan.function_ids
        for algorithm in plan.algorithms
        for run_index in range(plan.runs)
    ]
    results = Parallel(n_jobs=jobs)(
        delayed(execute_run)(plan, f, a, r) for f, a, r in tasks
    )

    summaries = []
    for start in range(0, len(tasks), plan.runs):
        function_id, algorithm, _ = tasks[start]
        chunk   = results[start:start + plan.runs]
        records = [record for record, _, _ in chunk]
        mean, sd = summarize([r.best_value for r in records])
        summaries.append(CellSummary(
            function_id=function_id,
            algorithm=algorithm,
            mean=mean,
            sd=sd,
            runs=records,
            seeds=[seed for _, seed, _ in chunk],
            fingerprints=[fp for _, _, fp in chunk],
        ))
    return summaries
