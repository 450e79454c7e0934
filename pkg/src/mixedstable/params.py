"""Core parameter bundles, seeding, and typed errors.

The process under study is the independent sum of an isotropic alpha-stable
process and an isotropic beta-stable process with weight ``a``, whose
generator is the operator sum of the two fractional Laplacians.  Every
sampler, formula, and estimator in this package is parametrised by the
quadruple ``(d, alpha, beta, a)`` collected here.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


class MixedStableError(Exception):
    """Base class for all errors raised by this package."""


class ParameterError(MixedStableError, ValueError):
    """A parameter is outside its validated domain."""


class SingularInputError(MixedStableError, ValueError):
    """The requested formula value is infinite at this input."""


class UnsupportedDimensionError(ParameterError):
    """The operation is only implemented for a restricted set of dimensions."""


class QuadratureError(MixedStableError, RuntimeError):
    """Adaptive quadrature failed to meet the requested tolerance.

    Carries the best available estimate and its error bound so callers can
    decide whether to degrade gracefully.
    """

    def __init__(self, message: str, best_estimate: float, error_bound: float):
        super().__init__(message)
        self.best_estimate = best_estimate
        self.error_bound = error_bound


@dataclass(frozen=True)
class MixedStableParams:
    """Exponents and weight of the mixed stable process.

    Standing assumptions: ``0 < beta < alpha < 2`` strictly, ``a >= 0``,
    integer dimension ``d >= 1``.  ``a = 0`` degenerates to the pure
    alpha-stable process.
    """

    d: int
    alpha: float
    beta: float
    a: float

    def __post_init__(self):
        if not (isinstance(self.d, (int, np.integer)) and self.d >= 1):
            raise ParameterError(f"dimension must be an integer >= 1, got {self.d!r}")
        if not (0.0 < self.beta < self.alpha < 2.0):
            raise ParameterError(
                f"exponents must satisfy 0 < beta < alpha < 2, "
                f"got alpha={self.alpha}, beta={self.beta}"
            )
        if not self.a >= 0.0:
            raise ParameterError(f"weight a must be >= 0, got {self.a}")

    def with_weight(self, a: float) -> "MixedStableParams":
        return MixedStableParams(self.d, self.alpha, self.beta, a)


@dataclass(frozen=True)
class SpaceTimePoint:
    """A time, a pair of spatial points, and their distances to the complement
    of whatever domain is in play (zero when no domain applies)."""

    t: float
    x: np.ndarray
    y: np.ndarray
    delta_x: float = 0.0
    delta_y: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "x", np.atleast_1d(np.asarray(self.x, dtype=float)))
        object.__setattr__(self, "y", np.atleast_1d(np.asarray(self.y, dtype=float)))
        if not self.t > 0.0:
            raise ParameterError(f"time must be positive, got {self.t}")
        if self.delta_x < 0.0 or self.delta_y < 0.0:
            raise ParameterError("distances to the complement must be >= 0")
        if self.x.shape != self.y.shape:
            raise ParameterError("x and y must have equal dimension")

    @property
    def r(self) -> float:
        return float(np.linalg.norm(self.x - self.y))

    def swapped(self) -> "SpaceTimePoint":
        return SpaceTimePoint(self.t, self.y, self.x, self.delta_y, self.delta_x)


@dataclass(frozen=True)
class SeedSpec:
    """Deterministic random-stream identity.

    ``(master_seed, stream_id)`` keys a Philox counter-based generator;
    distinct pairs give statistically independent streams.  Batches of Monte
    Carlo paths draw from non-overlapping jumps within one stream, so results
    do not depend on how batches are scheduled across workers.
    """

    master_seed: int
    stream_id: int = 0

    def __post_init__(self):
        if not (0 <= self.master_seed < 2**64):
            raise ParameterError("master_seed must fit in 64 bits")
        if not (0 <= self.stream_id < 2**64):
            raise ParameterError("stream_id must fit in 64 bits")

    def generator(self, jump: int = 0) -> np.random.Generator:
        """Generator for sub-stream ``jump`` (each jump is 2**128 draws apart)."""
        bitgen = np.random.Philox(key=[self.master_seed, self.stream_id])
        if jump:
            bitgen = bitgen.jumped(jump)
        return np.random.Generator(bitgen)

    def substream(self, offset: int) -> "SeedSpec":
        """A related but independent stream, for auxiliary runs."""
        return SeedSpec(self.master_seed, (self.stream_id + offset) % 2**64)
