# services/core.py
"""
Shared numeric plumbing: box bounds, clamping, the seeded random stream and
evaluation-budget accounting. Every other service builds on these.
"""
import hashlib
from dataclasses import dataclass

import numpy as np

# A decision vector is a 1-D float array of length D.
SolutionVector = np.ndarray

_MASK64 = (1 << 64) - 1


# ── Hatalar ───────────────────────────────────────────────────────────────────

class InvalidBoundsError(ValueError):
    pass


class InvalidDimensionError(ValueError):
    pass


class ConfigurationError(ValueError):
    pass


class BudgetExhausted(Exception):
    """Raised by the evaluation choke point once max_ffe evaluations are spent."""


# ── Bounds ────────────────────────────────────────────────────────────────────

@dataclass(frozen=True)
class Bounds:
    lower: float
    upper: float

    def __post_init__(self):
        if not self.lower < self.upper:
            raise InvalidBoundsError(
                f"lower bound {self.lower} must be below upper bound {self.upper}"
            )

    @property
    def width(self):
        return self.upper - self.lower

    def contains(self, x):
        x = np.asarray(x, dtype=float)
        return bool(np.all((x >= self.lower) & (x <= self.upper)))

    def label(self):
        return f"[{self.lower:g},{self.upper:g}]"


def clamp(x, b):
    return np.clip(np.asarray(x, dtype=float), b.lower, b.upper)


def uniform_in_bounds(rng, b, d):
    if d < 1:
        raise InvalidDimensionError(f"dimension must be >= 1, got {d}")
    u = rng.uniform(d)
    return b.lower + u * (b.upper - b.lower)


# ── Random stream ─────────────────────────────────────────────────────────────

def derive_seed(base_seed, *parts):
    """64-bit seed for one (algorithm, function, variant, run, ...) tuple."""
    h = hashlib.blake2b(digest_size=8)
    h.update((int(base_seed) & _MASK64).to_bytes(8, 'little'))
    for part in parts:
        h.update(b'\x1f')
        h.update(str(part).encode('utf-8'))
    return int.from_bytes(h.digest(), 'little')


class RngStream:
    """
    Deterministic stream over numpy's PCG64. Two streams built from the same
    seed yield identical draws.
    """

    def __init__(self, seed):
        self.seed = int(seed) & _MASK64
        self._gen = np.random.Generator(np.random.PCG64(self.seed))

    def uniform(self, size=None):
        """Draws in [0, 1)."""
        return self._gen.random(size)

    def signed_uniform(self, size=None):
        """Draws in [-1, 1)."""
        return 2.0 * self.uniform(size) - 1.0

    def normal(self, size=None):
        # Box–Muller over paired uniforms; 1 - u keeps the log argument in (0, 1].
        n = 1 if size is None else int(np.prod(size))
        u = self.uniform(2 * n)
        radius = np.sqrt(-2.0 * np.log(1.0 - u[:n]))
        z = radius * np.cos(2.0 * np.pi * u[n:])
        if size is None:
            return float(z[0])
        return z.reshape(size)

    def integers(self, low, high, size=None):
        """Integers in [low, high)."""
        return self._gen.integers(low, high, size=size)

    def choice(self, n, size=None, p=None, replace=True):
        return self._gen.choice(n, size=size, p=p, replace=replace)


# ── FFE bütçesi ───────────────────────────────────────────────────────────────

class EvaluationBudget:

    def __init__(self, max_ffe):
        if max_ffe < 1:
            raise ConfigurationError(f"max_ffe must be positive, got {max_ffe}")
        self.max_ffe  = int(max_ffe)
        self.used_ffe = 0

    @classmethod
    def for_dimension(cls, dimension, per_dimension):
        return cls(per_dimension * dimension)

    @property
    def remaining(self):
        return self.max_ffe - self.used_ffe

    @property
    def exhausted(self):
        return self.used_ffe >= self.max_ffe

    def charge(self):
        if self.used_ffe >= self.max_ffe:
            raise BudgetExhausted(f"budget of {self.max_ffe} FFE spent")
        self.used_ffe += 1
        return self.used_ffe
