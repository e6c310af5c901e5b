# services/optimizers/random_search.py
from services.core import BudgetExhausted, uniform_in_bounds
from services.optimizers.base import start


def run_random_search(objective, config, rng, budget, trace_stride=None):
    """Uniform sampling until the budget is spent; the baseline every optimizer must beat."""
    evaluate = start(objective, config, budget, trace_stride)
    try:
        while True:
            evaluate(uniform_in_bounds(rng, objective.bounds, objective.dimension))
    except BudgetExhausted:
        pass
    return evaluate.record()
