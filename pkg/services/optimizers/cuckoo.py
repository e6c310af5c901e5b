# services/optimizers/cuckoo.py
import math

import numpy as np

from services.core import BudgetExhausted, clamp
from services.optimizers.base import detect_collapse, initial_population, start


def egg_laying_radius(alpha, n_eggs, total_eggs, width):
    return alpha * (n_eggs / total_eggs) * width


def egg_offset(rng, radius, d):
    """Step of Euclidean length uniform in [0, radius) along a uniformly random direction."""
    direction = rng.normal(d)
    norm = float(np.linalg.norm(direction))
    if norm == 0.0:
        return np.zeros(d)
    return (radius * rng.uniform()) * direction / norm


def _too_close(egg, others, epsilon):
    if not others:
        return False
    gaps = np.max(np.abs(np.vstack(others) - egg), axis=1)
    return bool(np.min(gaps) <= epsilon)


def run_coa(objective, config, rng, budget, trace_stride=None):
    """
    Single-cluster cuckoo search. Each cuckoo lays its eggs at random
    distances inside its egg-laying radius, near-duplicate eggs are dropped
    before evaluation and the worst surviving eggs are killed. Hatched eggs
    join the society, the best population_size cuckoos mature, and every
    mature cuckoo except the best flies part of the way toward it.
    """
    evaluate = start(objective, config, budget, trace_stride)
    pop      = config.population_size
    d        = objective.dimension
    b        = objective.bounds
    collapsed = False

    try:
        habitats, values = initial_population(objective, rng, pop, evaluate)

        while True:
            n_eggs = rng.integers(config.egg_min, config.egg_max + 1, size=len(habitats))
            total  = int(n_eggs.sum())

            # egg laying
            placed = list(habitats)
            eggs   = []
            for i, count in enumerate(n_eggs):
                elr = egg_laying_radius(config.elr_coeff, count, total, b.width)
                for _ in range(count):
                    egg = clamp(habitats[i] + egg_offset(rng, elr, d), b)
                    if _too_close(egg, placed, config.egg_kill_epsilon):
                        continue
                    placed.append(egg)
                    eggs.append(egg)

            egg_vals = np.array([evaluate(egg) for egg in eggs])

            # host birds recognise the worst eggs
            if eggs:
                n_kill = int(math.floor(config.egg_kill_fraction * len(eggs)))
                keep   = np.argsort(egg_vals, kind='stable')[:len(eggs) - n_kill]
                society      = np.vstack([habitats, np.vstack(eggs)[keep]])
                society_vals = np.concatenate([values, egg_vals[keep]])
            else:
                society, society_vals = habitats, values

            # survivors mature
            keep = np.argsort(society_vals, kind='stable')[:pop]
            habitats, values = society[keep].copy(), society_vals[keep].copy()

            # migration toward the single global goal; habitats[0] is the goal
            goal = habitats[0].copy()
            for i in range(1, len(habitats)):
                f = config.migration_scale * rng.uniform()
                habitats[i] = clamp(habitats[i] + f * rng.uniform(d) * (goal - habitats[i]), b)
                values[i]   = evaluate(habitats[i])

            if config.stop_on_collapse and detect_collapse(habitats):
                collapsed = True
                break
    except BudgetExhausted:
        pass

    return evaluate.record(terminated_early=collapsed)
