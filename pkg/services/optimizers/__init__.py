# services/optimizers/__init__.py
from services.optimizers.base import (
    Evaluator, Objective, RunRecord, TraceSample, detect_collapse,
)
from services.optimizers.bee_colony import run_abc
from services.optimizers.configs import (
    CONFIG_TYPES, RandomSearchConfig, config_to_dict, make_config,
)
from services.optimizers.cuckoo import run_coa
from services.optimizers.ga import run_ga
from services.optimizers.pso import run_pso
from services.optimizers.random_search import run_random_search
from services.optimizers.tlbo import run_tlbo

OPTIMIZERS = {
    'ga':   run_ga,
    'pso':  run_pso,
    'abc':  run_abc,
    'tlbo': run_tlbo,
    'coa':  run_coa,
}


def run_optimizer(algorithm, objective, config, rng, budget, trace_stride=None):
    return OPTIMIZERS[algorithm](objective, config, rng, budget, trace_stride=trace_stride)


__all__ = [
    'CONFIG_TYPES', 'Evaluator', 'OPTIMIZERS', 'Objective', 'RandomSearchConfig',
    'RunRecord', 'TraceSample', 'config_to_dict', 'detect_collapse', 'make_config',
    'run_abc', 'run_coa', 'run_ga', 'run_optimizer', 'run_pso', 'run_random_search',
    'run_tlbo',
]
