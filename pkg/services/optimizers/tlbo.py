# services/optimizers/tlbo.py
import numpy as np

from services.core import BudgetExhausted, clamp
from services.optimizers.base import detect_collapse, initial_population, start


def run_tlbo(objective, config, rng, budget, trace_stride=None):
    evaluate = start(objective, config, budget, trace_stride)
    pop      = config.population_size
    d        = objective.dimension
    b        = objective.bounds
    collapsed = False

    def accept(i, candidate):
        value = evaluate(candidate)
        if value < values[i]:
            learners[i] = candidate
            values[i]   = value

    try:
        learners, values = initial_population(objective, rng, pop, evaluate)

        while True:
            # teacher phase
            teacher = learners[int(np.argmin(values))].copy()
            mean    = learners.mean(axis=0)
            for i in range(pop):
                tf = int(rng.integers(1, 3))
                r  = rng.uniform(d)
                accept(i, clamp(learners[i] + r * (teacher - tf * mean), b))

            # learner phase
            for i in range(pop):
                k = int(rng.integers(0, pop - 1))
                if k >= i:
                    k += 1
                r = rng.uniform(d)
                if values[i] < values[k]:
                    step = learners[i] - learners[k]
                else:
                    step = learners[k] - learners[i]
                accept(i, clamp(learners[i] + r * step, b))

            if config.stop_on_collapse and detect_collapse(learners):
                collapsed = True
                break
    except BudgetExhausted:
        pass

    return evaluate.record(terminated_early=collapsed)
