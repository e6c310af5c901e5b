# config.py
import os
import pytz
from dotenv import load_dotenv

load_dotenv()

VERSION = "0.1.0"

# ── Timezone ──────────────────────────────────────────────────────────────────
TIMEZONE = pytz.timezone(os.getenv('METABENCH_TZ', 'UTC'))

# ── Monitoring ────────────────────────────────────────────────────────────────
SENTRY_DSN = os.getenv('SENTRY_DSN')

# ── Çıktı / paralellik ────────────────────────────────────────────────────────
OUTPUT_DIR   = os.getenv('METABENCH_OUT', 'results')
DEFAULT_JOBS = int(os.getenv('METABENCH_JOBS', '-1'))   # joblib: -1 = all cores

# ── Seed ──────────────────────────────────────────────────────────────────────
DEFAULT_BASE_SEED = 20180101


def default_base_seed():
    """METABENCH_SEED wins over the built-in seed; read on every call."""
    raw = os.getenv('METABENCH_SEED')
    if raw is None or raw.strip() == '':
        return DEFAULT_BASE_SEED
    return int(raw, 0)


# ── Deney protokolü ───────────────────────────────────────────────────────────
FFE_PER_DIMENSION = 1333
DEFAULT_DIMENSION = 30
DEFAULT_RUNS      = 30

COLLAPSE_TOLERANCE    = 1e-12
MAX_ROTATION_ATTEMPTS = 10
SHIFT_MARGIN          = 0.1    # shift drawn from the central 80% of the range

VARIANTS = ('plain', 'shift_rotated')

# ── Algoritmalar ──────────────────────────────────────────────────────────────
ALGORITHMS = ('ga', 'pso', 'abc', 'tlbo', 'coa')

ALGORITHM_DEFAULTS = {
    'ga': {
        'population_size':  40,
        'mutation_coeff':   0.9,
        'crossover_coeff':  0.9,
        'selection':        'rank',
        'crossover':        'one_point',
        'stop_on_collapse': True,
    },
    'pso': {
        'population_size':  40,
        'c1':               2.0,
        'c2':               2.0,
        'inertia':          0.25,
        'phi_draw':         'unit',
        'stop_on_collapse': False,
    },
    'abc': {
        'population_size':  40,
        'global_coeff':     1.0,
        'local_coeff':      1.3,
        'limit':            None,    # None → population_size * D / 2
        'stop_on_collapse': False,
    },
    'tlbo': {
        'population_size':  20,
        'stop_on_collapse': False,
    },
    'coa': {
        'population_size':  20,
        'elr_coeff':        1.0,
        'migration_scale':  0.5235987755982988,   # π/6, multiplied by rand(0,1) per move
        'clusters':         1,
        'egg_min':          2,
        'egg_max':          5,
        'egg_kill_epsilon': 1e-8,
        'egg_kill_fraction': 0.1,
        'stop_on_collapse': True,
    },
}
