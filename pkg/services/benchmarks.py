# services/benchmarks.py
"""
The twenty minimization benchmarks (ten unimodal, ten multimodal), their
optimum metadata, and the random shift-rotation used to move the optimum
away from the centre of the search box.
"""
import hashlib
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from config import MAX_ROTATION_ATTEMPTS, SHIFT_MARGIN
from services.core import Bounds, clamp


class DimensionMismatchError(ValueError):
    pass


class DegenerateRotationError(ValueError):
    pass


class MissingOptimumError(ValueError):
    pass


class UnknownFunctionError(ValueError):
    pass


# ── Formüller ─────────────────────────────────────────────────────────────────

def _sphere(x, rng):
    return float(np.dot(x, x))


def _rosenbrock(x, rng):
    head, tail = x[:-1], x[1:]
    return float(np.sum(100.0 * (head ** 2 - tail) ** 2 + (1.0 - head) ** 2))


def _schwefel_n1_2(x, rng):
    return float(np.sum(np.cumsum(x ** 2) ** 2))


def _schwefel_n2_21(x, rng):
    return float(np.max(np.abs(x)))


def _schwefel_n2_22(x, rng):
    ax = np.abs(x)
    return float(np.sum(ax) + np.prod(ax))


def _step(x, rng):
    return float(np.sum(np.floor(x + 0.5) ** 2))


def _quartic(x, rng):
    i = np.arange(1, x.size + 1)
    return float(np.sum(i * x ** 4) + rng.uniform())


@lru_cache(maxsize=None)
def _elliptic_weights(d):
    if d == 1:
        return np.ones(1)
    return (1e6) ** (np.arange(d) / (d - 1))


def _elliptic(x, rng):
    return float(np.sum(x ** 2 * _elliptic_weights(x.size)))


def _bent_cigar(x, rng):
    return float(x[0] ** 2 + 1e6 * np.sum(x[1:] ** 2))


def _discus(x, rng):
    return float(1e6 * x[0] ** 2 + np.sum(x[1:] ** 2))


def _rastrigin(x, rng):
    return float(np.sum(x ** 2 - 10.0 * np.cos(2.0 * np.pi * x) + 10.0))


def _ackley(x, rng):
    d = x.size
    return float(
        np.e + 20.0
        - 20.0 * np.exp(-0.2 * np.sqrt(np.sum(x ** 2) / d))
        - np.exp(np.sum(np.cos(2.0 * np.pi * x)) / d)
    )


def _griewank(x, rng):
    i = np.arange(1, x.size + 1)
    return float(np.sum(x ** 2) / 4000.0 - np.prod(np.cos(x / np.sqrt(i))) + 1.0)


def _schwefel(x, rng):
    return float(-np.sum(x * np.sin(np.sqrt(np.abs(x)))) / x.size)


_WEIERSTRASS_A = 0.5 ** np.arange(21)
_WEIERSTRASS_B = 2.0 * np.pi * 3.0 ** np.arange(21)


def _weierstrass_terms(z):
    # z has shape (D,); result[i] = Σ_j a^j cos(2π b^j z_i)
    return np.cos(np.outer(z, _WEIERSTRASS_B)) @ _WEIERSTRASS_A


_WEIERSTRASS_BIAS = float(_weierstrass_terms(np.array([0.5]))[0])


def _weierstrass(x, rng):
    return float(np.sum(_weierstrass_terms(x + 0.5)) - x.size * _WEIERSTRASS_BIAS)


def _nc_rastrigin(x, rng):
    y = np.where(np.abs(x) < 0.5, x, np.round(2.0 * x) / 2.0)
    return _rastrigin(y, rng)


def _penalty(x, a, k, m):
    return np.where(x > a, k * (x - a) ** m, np.where(x < -a, k * (-x - a) ** m, 0.0))


def _penalized(x, rng):
    d = x.size
    y = 1.0 + (x + 1.0) / 4.0
    body = (
        10.0 * np.sin(np.pi * y[0]) ** 2
        + np.sum((y[:-1] - 1.0) ** 2 * (1.0 + 10.0 * np.sin(np.pi * y[1:]) ** 2))
        + (y[-1] - 1.0) ** 2
    )
    return float(np.pi / d * body + np.sum(_penalty(x, 10.0, 100.0, 4)))


def _penalized2(x, rng):
    body = (
        np.sin(3.0 * np.pi * x[0]) ** 2
        + np.sum((x[:-1] - 1.0) ** 2 * (1.0 + np.sin(3.0 * np.pi * x[1:]) ** 2))
        + (x[-1] - 1.0) ** 2 * (1.0 + np.sin(2.0 * np.pi * x[-1]) ** 2)
    )
    return float(0.1 * body + np.sum(_penalty(x, 5.0, 100.0, 4)))


def _xinsheyang_f4(x, rng):
    inner = np.sum(np.sin(x[1:]) ** 2) - np.exp(-np.sum(x ** 2))
    return float(inner * np.exp(-np.sum(np.sin(np.sqrt(np.abs(x))) ** 2)))


def _inverted_vincent(x, rng):
    return float(1.0 + np.sum(np.sin(10.0 * np.log(x))) / x.size)


# ── Registry ──────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class FunctionInfo:
    formula:   Callable
    bounds:    Bounds
    modality:  str
    optimum:   Optional[float]        # coordinate value repeated D times
    value:     Optional[float]
    noisy:     bool = False
    checked:   bool = True            # optimum metadata is self-consistent


FUNCTIONS = {
    # unimodal
    'sphere':           FunctionInfo(_sphere,          Bounds(-100, 100),   'unimodal',   0.0,      0.0),
    'rosenbrock':       FunctionInfo(_rosenbrock,      Bounds(-32, 32),     'unimodal',   1.0,      0.0),
    'schwefel_n1_2':    FunctionInfo(_schwefel_n1_2,   Bounds(-100, 100),   'unimodal',   0.0,      0.0),
    'schwefel_n2_21':   FunctionInfo(_schwefel_n2_21,  Bounds(-100, 100),   'unimodal',   0.0,      0.0),
    'schwefel_n2_22':   FunctionInfo(_schwefel_n2_22,  Bounds(-10, 10),     'unimodal',   0.0,      0.0),
    'step':             FunctionInfo(_step,            Bounds(-100, 100),   'unimodal',   -0.5,     0.0),
    'quartic':          FunctionInfo(_quartic,         Bounds(-1.28, 1.28), 'unimodal',   0.0,      None, noisy=True),
    'elliptic':         FunctionInfo(_elliptic,        Bounds(-5.12, 5.12), 'unimodal',   0.0,      0.0),
    'bentcigar':        FunctionInfo(_bent_cigar,      Bounds(-5.12, 5.12), 'unimodal',   0.0,      0.0),
    'discus':           FunctionInfo(_discus,          Bounds(-5.12, 5.12), 'unimodal',   0.0,      0.0),
    # multimodal
    'rastrigin':        FunctionInfo(_rastrigin,       Bounds(-5.12, 5.12), 'multimodal', 0.0,      0.0),
    'ackley':           FunctionInfo(_ackley,          Bounds(-32, 32),     'multimodal', 0.0,      0.0),
    'griewank':         FunctionInfo(_griewank,        Bounds(-600, 600),   'multimodal', 0.0,      0.0),
    'schwefel':         FunctionInfo(_schwefel,        Bounds(-500, 500),   'multimodal', 420.9687, -418.983),
    'weierstrass':      FunctionInfo(_weierstrass,     Bounds(-0.5, 0.5),   'multimodal', 0.0,      0.0),
    'ncrastrigin':      FunctionInfo(_nc_rastrigin,    Bounds(-5.12, 5.12), 'multimodal', 0.0,      0.0),
    'penalized':        FunctionInfo(_penalized,       Bounds(-50, 50),     'multimodal', -1.0,     0.0),
    'penalized2':       FunctionInfo(_penalized2,      Bounds(-50, 50),     'multimodal', 1.0,      0.0),
    'xinsheyang_f4':    FunctionInfo(_xinsheyang_f4,   Bounds(-10, 10),     'multimodal', 0.0,      0.0, checked=False),
    'inverted_vincent': FunctionInfo(_inverted_vincent, Bounds(0.25, 10),   'multimodal', 0.0,      0.0, checked=False),
}

UNIMODAL   = tuple(name for name, info in FUNCTIONS.items() if info.modality == 'unimodal')
MULTIMODAL = tuple(name for name, info in FUNCTIONS.items() if info.modality == 'multimodal')

# Convergence-study subset: four unimodal plus four multimodal functions.
CONVERGENCE_FUNCTIONS = (
    'sphere', 'rosenbrock', 'bentcigar', 'schwefel_n2_22',
    'ackley', 'schwefel', 'rastrigin', 'inverted_vincent',
)


@dataclass(frozen=True, eq=False)
class ObjectiveSpec:
    id:               str
    dimension:        int
    bounds:           Bounds
    optimum_location: Optional[np.ndarray]
    optimum_value:    Optional[float]
    modality:         str
    noisy:            bool

    @property
    def optimum_checked(self):
        return FUNCTIONS[self.id].checked


def get_spec(name, dimension):
    info = FUNCTIONS.get(name)
    if info is None:
        raise UnknownFunctionError(f"unknown function: {name}")
    if dimension < 1:
        raise DimensionMismatchError(f"dimension must be >= 1, got {dimension}")
    location = None if info.optimum is None else np.full(dimension, info.optimum)
    return ObjectiveSpec(
        id=name,
        dimension=dimension,
        bounds=info.bounds,
        optimum_location=location,
        optimum_value=info.value,
        modality=info.modality,
        noisy=info.noisy,
    )


# ── Değerlendirme ─────────────────────────────────────────────────────────────

def evaluate(spec, x, rng=None):
    x = np.asarray(x, dtype=float)
    if x.shape != (spec.dimension,):
        raise DimensionMismatchError(
            f"{spec.id}: expected a vector of length {spec.dimension}, got shape {x.shape}"
        )
    if spec.noisy and rng is None:
        raise ValueError(f"{spec.id} is noisy and needs a random stream")
    return FUNCTIONS[spec.id].formula(x, rng)


def error_from_optimum(spec, value):
    if spec.optimum_value is None:
        raise MissingOptimumError(f"{spec.id} has no fixed optimum value")
    return value - spec.optimum_value


# ── Shift-rotation ────────────────────────────────────────────────────────────

@dataclass(frozen=True, eq=False)
class ShiftRotate:
    shift:    np.ndarray
    rotation: np.ndarray

    @classmethod
    def identity(cls, dimension):
        return cls(shift=np.zeros(dimension), rotation=np.eye(dimension))

    def apply(self, x):
        return self.rotation @ (np.asarray(x, dtype=float) - self.shift)

    def fingerprint(self):
        h = hashlib.blake2b(digest_size=16)
        h.update(np.ascontiguousarray(self.shift).tobytes())
        h.update(np.ascontiguousarray(self.rotation).tobytes())
        return h.hexdigest()


def _modified_gram_schmidt(a, tolerance=1e-10):
    """Orthonormalize the columns of a; None when a column is numerically dependent."""
    q = np.array(a, dtype=float, copy=True)
    d = q.shape[1]
    for _ in range(2):      # second sweep restores orthogonality lost to rounding
        for j in range(d):
            for i in range(j):
                q[:, j] -= (q[:, i] @ q[:, j]) * q[:, i]
            norm = np.linalg.norm(q[:, j])
            if norm <= tolerance * max(1.0, np.linalg.norm(a[:, j])):
                return None
            q[:, j] /= norm
    return q


def make_shift_rotate(rng, spec):
    d = spec.dimension
    if d < 1:
        raise DimensionMismatchError(f"dimension must be >= 1, got {d}")

    rotation = None
    for _ in range(MAX_ROTATION_ATTEMPTS):
        rotation = _modified_gram_schmidt(rng.normal((d, d)))
        if rotation is not None:
            break
    if rotation is None:
        raise DegenerateRotationError(
            f"{spec.id}: no orthonormal basis after {MAX_ROTATION_ATTEMPTS} attempts"
        )

    b = spec.bounds
    u = rng.uniform(d)
    shift = b.lower + (SHIFT_MARGIN + (1.0 - 2.0 * SHIFT_MARGIN) * u) * b.width
    return ShiftRotate(shift=shift, rotation=rotation)


def evaluate_transformed(spec, t, x, rng=None):
    x = np.asarray(x, dtype=float)
    if x.shape != (spec.dimension,):
        raise DimensionMismatchError(
            f"{spec.id}: expected a vector of length {spec.dimension}, got shape {x.shape}"
        )
    return evaluate(spec, clamp(t.apply(x), spec.bounds), rng)
