# services/optimizers/ga.py
import math

import numpy as np

from services.core import BudgetExhausted
from services.optimizers.base import detect_collapse, initial_population, start


def rank_probabilities(values):
    """Linear ranking: the worst member gets weight 1, the best gets len(values)."""
    n = len(values)
    order = np.argsort(values, kind='stable')
    weights = np.empty(n)
    weights[order] = np.arange(n, 0, -1)
    return weights / weights.sum()


def one_point_crossover(a, b, cut):
    return (np.concatenate([a[:cut], b[cut:]]),
            np.concatenate([b[:cut], a[cut:]]))


def run_ga(objective, config, rng, budget, trace_stride=None):
    """Elitist generational GA: rank selection, 1-point crossover, one-gene mutation."""
    evaluate = start(objective, config, budget, trace_stride)
    pop      = config.population_size
    d        = objective.dimension
    b        = objective.bounds
    n_pairs  = max(1, math.ceil(math.ceil(config.crossover_coeff * pop) / 2))
    collapsed = False

    try:
        positions, values = initial_population(objective, rng, pop, evaluate)

        while True:
            probs   = rank_probabilities(values)
            parents = rng.choice(pop, size=(n_pairs, 2), p=probs)

            children = []
            for i, j in parents:
                if d > 1:
                    cut = int(rng.integers(1, d))
                    children.extend(one_point_crossover(positions[i], positions[j], cut))
                else:
                    children.extend((positions[i].copy(), positions[j].copy()))

            for child in children:
                if rng.uniform() < config.mutation_coeff:
                    gene = int(rng.integers(0, d))
                    child[gene] = b.lower + rng.uniform() * b.width

            child_values = np.empty(len(children))
            for k, child in enumerate(children):
                child_values[k] = evaluate(child)

            merged_pos  = np.vstack([positions, np.vstack(children)])
            merged_vals = np.concatenate([values, child_values])
            keep        = np.argsort(merged_vals, kind='stable')[:pop]
            positions, values = merged_pos[keep], merged_vals[keep]

            if config.stop_on_collapse and detect_collapse(positions):
                collapsed = True
                break
    except BudgetExhausted:
        pass

    return evaluate.record(terminated_early=collapsed)
