# services/optimizers/bee_colony.py
import numpy as np

from services.core import BudgetExhausted, uniform_in_bounds
from services.optimizers.base import detect_collapse, initial_population, start


def nectar(values):
    """Fitness used by the onlooker roulette: 1/(1+f) for f >= 0, 1+|f| otherwise."""
    values = np.asarray(values, dtype=float)
    out = np.empty_like(values)
    pos = values >= 0
    out[pos]  = 1.0 / (1.0 + values[pos])
    out[~pos] = 1.0 + np.abs(values[~pos])
    return out


def run_abc(objective, config, rng, budget, trace_stride=None):
    evaluate = start(objective, config, budget, trace_stride)
    n_food   = config.population_size // 2
    d        = objective.dimension
    b        = objective.bounds
    limit    = config.resolved_limit(d)
    collapsed = False

    def try_neighbour(i, coeff):
        k = int(rng.integers(0, n_food - 1))
        if k >= i:
            k += 1
        j = int(rng.integers(0, d))
        candidate = sources[i].copy()
        candidate[j] += coeff * rng.signed_uniform() * (sources[i, j] - sources[k, j])
        candidate[j] = min(b.upper, max(b.lower, candidate[j]))
        value = evaluate(candidate)
        if value < values[i]:
            sources[i] = candidate
            values[i]  = value
            trials[i]  = 0
        else:
            trials[i] += 1

    try:
        sources, values = initial_population(objective, rng, n_food, evaluate)
        trials = np.zeros(n_food, dtype=int)

        while True:
            # employed bees
            for i in range(n_food):
                try_neighbour(i, config.global_coeff)

            # onlookers
            fitness = nectar(values)
            probs   = fitness / fitness.sum()
            for _ in range(n_food):
                try_neighbour(int(rng.choice(n_food, p=probs)), config.local_coeff)

            # scout: at most one exhausted source per cycle
            stalest = int(np.argmax(trials))
            if trials[stalest] >= limit:
                sources[stalest] = uniform_in_bounds(rng, b, d)
                trials[stalest]  = 0
                values[stalest]  = evaluate(sources[stalest])

            if config.stop_on_collapse and detect_collapse(sources):
                collapsed = True
                break
    except BudgetExhausted:
        pass

    return evaluate.record(terminated_early=collapsed)
