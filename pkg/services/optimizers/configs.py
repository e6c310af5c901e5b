# services/optimizers/configs.py
from dataclasses import asdict, dataclass
from typing import ClassVar, Optional

from config import ALGORITHM_DEFAULTS
from services.core import ConfigurationError


@dataclass(frozen=True)
class GAConfig:
    population_size:  int
    mutation_coeff:   float
    crossover_coeff:  float
    selection:        str
    crossover:        str
    stop_on_collapse: bool

    algorithm: ClassVar[str] = 'ga'

    def validate(self):
        _check_unit('mutation_coeff', self.mutation_coeff)
        _check_unit('crossover_coeff', self.crossover_coeff)
        if self.selection != 'rank':
            raise ConfigurationError(f"ga: unsupported selection '{self.selection}'")
        if self.crossover != 'one_point':
            raise ConfigurationError(f"ga: unsupported crossover '{self.crossover}'")

    @property
    def evals_per_iteration(self):
        return self.population_size


@dataclass(frozen=True)
class PSOConfig:
    population_size:  int
    c1:               float
    c2:               float
    inertia:          float
    phi_draw:         str
    stop_on_collapse: bool

    algorithm: ClassVar[str] = 'pso'

    def validate(self):
        if self.phi_draw not in ('signed', 'unit'):
            raise ConfigurationError(f"pso: phi_draw must be 'signed' or 'unit', got '{self.phi_draw}'")

    @property
    def evals_per_iteration(self):
        return self.population_size


@dataclass(frozen=True)
class ABCConfig:
    population_size:  int
    global_coeff:     float
    local_coeff:      float
    limit:            Optional[int]
    stop_on_collapse: bool

    algorithm: ClassVar[str] = 'abc'

    def validate(self):
        if self.population_size < 4:
            raise ConfigurationError("abc: population_size must be >= 4 (two food sources)")
        if self.limit is not None and self.limit < 1:
            raise ConfigurationError(f"abc: limit must be >= 1, got {self.limit}")

    def resolved_limit(self, dimension):
        if self.limit is not None:
            return self.limit
        return self.population_size * dimension // 2

    @property
    def evals_per_iteration(self):
        return self.population_size


@dataclass(frozen=True)
class TLBOConfig:
    population_size:  int
    stop_on_collapse: bool

    algorithm: ClassVar[str] = 'tlbo'

    def validate(self):
        pass

    @property
    def evals_per_iteration(self):
        # teacher phase + learner phase
        return 2 * self.population_size


@dataclass(frozen=True)
class COAConfig:
    population_size:   int
    elr_coeff:         float
    migration_scale:   float
    clusters:          int
    egg_min:           int
    egg_max:           int
    egg_kill_epsilon:  float
    egg_kill_fraction: float
    stop_on_collapse:  bool

    algorithm: ClassVar[str] = 'coa'

    def validate(self):
        if self.clusters != 1:
            raise ConfigurationError("coa: only a single cluster is supported")
        if not 1 <= self.egg_min <= self.egg_max:
            raise ConfigurationError(
                f"coa: need 1 <= egg_min <= egg_max, got {self.egg_min}..{self.egg_max}"
            )
        if self.elr_coeff <= 0:
            raise ConfigurationError("coa: elr_coeff must be positive")
        _check_unit('egg_kill_fraction', self.egg_kill_fraction)

    @property
    def evals_per_iteration(self):
        return self.population_size


@dataclass(frozen=True)
class RandomSearchConfig:
    population_size:  int = 40     # only sets the trace stride
    stop_on_collapse: bool = False

    algorithm: ClassVar[str] = 'random'

    def validate(self):
        pass

    @property
    def evals_per_iteration(self):
        return self.population_size


CONFIG_TYPES = {
    'ga':   GAConfig,
    'pso':  PSOConfig,
    'abc':  ABCConfig,
    'tlbo': TLBOConfig,
    'coa':  COAConfig,
}


def _check_unit(name, value):
    if not 0.0 <= value <= 1.0:
        raise ConfigurationError(f"{name} must lie in [0, 1], got {value}")


def make_config(algorithm, **overrides):
    """Tuned defaults for `algorithm`, with `overrides` applied on top."""
    cls = CONFIG_TYPES.get(algorithm)
    if cls is None:
        raise ConfigurationError(f"unknown algorithm: {algorithm}")
    params = dict(ALGORITHM_DEFAULTS[algorithm])
    unknown = set(overrides) - set(params)
    if unknown:
        raise ConfigurationError(f"{algorithm}: unknown parameters {sorted(unknown)}")
    params.update(overrides)
    config = cls(**params)
    if config.population_size < 2:
        raise ConfigurationError(
            f"{algorithm}: population_size must be >= 2, got {config.population_size}"
        )
    config.validate()
    return config


def config_to_dict(config):
    data = asdict(config)
    data['algorithm'] = config.algorithm
    return data
