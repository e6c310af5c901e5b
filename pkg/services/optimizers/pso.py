# services/optimizers/pso.py
import numpy as np

from services.core import BudgetExhausted, clamp
from services.optimizers.base import detect_collapse, initial_population, start


def run_pso(objective, config, rng, budget, trace_stride=None):
    evaluate = start(objective, config, budget, trace_stride)
    pop      = config.population_size
    d        = objective.dimension
    b        = objective.bounds
    vmax     = b.width
    draw     = rng.signed_uniform if config.phi_draw == 'signed' else rng.uniform
    collapsed = False

    try:
        positions, values = initial_population(objective, rng, pop, evaluate)
        velocities = np.zeros((pop, d))
        pbest      = positions.copy()
        pbest_vals = values.copy()
        g          = int(np.argmin(pbest_vals))
        gbest      = pbest[g].copy()
        gbest_val  = pbest_vals[g]

        while True:
            for i in range(pop):
                phi1 = config.c1 * draw(d)
                phi2 = config.c2 * draw(d)
                velocities[i] = (config.inertia * velocities[i]
                                 + phi1 * (pbest[i] - positions[i])
                                 + phi2 * (gbest - positions[i]))
                np.clip(velocities[i], -vmax, vmax, out=velocities[i])
                positions[i] = clamp(positions[i] + velocities[i], b)

                value = evaluate(positions[i])
                if value < pbest_vals[i]:
                    pbest[i]      = positions[i]
                    pbest_vals[i] = value
                    if value < gbest_val:
                        gbest     = positions[i].copy()
                        gbest_val = value

            if config.stop_on_collapse and detect_collapse(positions):
                collapsed = True
                break
    except BudgetExhausted:
        pass

    return evaluate.record(terminated_early=collapsed)
