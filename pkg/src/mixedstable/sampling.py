"""Exact-in-distribution samplers for stable laws and mixed increments.

One-dimensional symmetric draws use the Chambers-Mallows-Stuck transform in
the zero-skew parametrisation; one-sided (subordinator) draws use the Kanter
representation.  Isotropic d-dimensional increments are built by Gaussian
subordination, which is exact in law and uniform across dimensions.  All
samplers are stateless given a generator; uniform inputs are taken from the
open interval to stay clear of the transform singularities at the endpoint
angles.
"""

from __future__ import annotations

import numpy as np

from .params import MixedStableParams, ParameterError

__all__ = [
    "sample_symmetric_stable",
    "sample_positive_stable",
    "sample_isotropic_stable",
    "sample_mixed_increment",
    "sample_subordinator_increment",
]


def _open_uniform(rng: np.random.Generator, size):
    """Uniform draws from the open interval (0, 1)."""
    u = rng.random(size)
    tiny = np.nextafter(0.0, 1.0)
    if np.ndim(u) == 0:
        return tiny if u == 0.0 else u
    u[u == 0.0] = tiny
    return u


def _positive_exponential(rng: np.random.Generator, size):
    w = rng.standard_exponential(size)
    tiny = np.nextafter(0.0, 1.0)
    if np.ndim(w) == 0:
        return tiny if w == 0.0 else w
    w[w == 0.0] = tiny
    return w


def sample_symmetric_stable(alpha: float, rng: np.random.Generator, size=None):
    """Draws with characteristic function exp(-|xi|**alpha), 0 < alpha < 2.

    Chambers-Mallows-Stuck: with theta uniform on (-pi/2, pi/2) and W a unit
    exponential,

        sin(alpha * theta) / cos(theta)**(1/alpha)
            * (cos((alpha-1) * theta) / W)**((1-alpha)/alpha)

    which degenerates to tan(theta) at alpha = 1 (the Cauchy law).
    """
    if not 0.0 < alpha < 2.0:
        raise ParameterError(f"alpha must lie in (0, 2), got {alpha}")
    theta = np.pi * (_open_uniform(rng, size) - 0.5)
    w = _positive_exponential(rng, size)
    value = np.sin(alpha * theta) / np.cos(theta) ** (1.0 / alpha)
    if alpha != 1.0:
        value = value * (np.cos((alpha - 1.0) * theta) / w) ** ((1.0 - alpha) / alpha)
    return value


def sample_positive_stable(gamma: float, rng: np.random.Generator, size=None):
    """Strictly positive draws with Laplace transform exp(-lambda**gamma).

    Kanter representation: with U uniform on (0, 1) and W a unit exponential,

        S = (A(pi U) / W)**((1-gamma)/gamma),
        A(u) = sin((1-gamma) u) * sin(gamma u)**(gamma/(1-gamma))
               / sin(u)**(1/(1-gamma)).

    Evaluated in log space; the exponents blow up as gamma -> 1.
    """
    if not 0.0 < gamma < 1.0:
        raise ParameterError(f"gamma must lie in (0, 1), got {gamma}")
    u = np.pi * _open_uniform(rng, size)
    w = _positive_exponential(rng, size)
    frac = gamma / (1.0 - gamma)
    log_a = (
        np.log(np.sin((1.0 - gamma) * u))
        + frac * np.log(np.sin(gamma * u))
        - (1.0 + frac) * np.log(np.sin(u))
    )
    return np.exp(((1.0 - gamma) / gamma) * (log_a - np.log(w)))


def _isotropic_stable(alpha: float, d: int, t: float, rng: np.random.Generator, size=None):
    """Isotropic increment over time t via Gaussian subordination.

    Conditionally Gaussian with per-coordinate variance 2S where S is a
    positive (alpha/2)-stable variable scaled by t**(2/alpha); the resulting
    characteristic function is exp(-t |xi|**alpha).
    """
    n = 1 if size is None else int(size)
    s = t ** (2.0 / alpha) * sample_positive_stable(alpha / 2.0, rng, n)
    g = rng.standard_normal((n, d))
    out = np.sqrt(2.0 * s)[:, None] * g
    return out[0] if size is None else out


def sample_isotropic_stable(p: MixedStableParams, t: float, rng: np.random.Generator, size=None):
    """Increment of the isotropic alpha-stable part over time ``t``."""
    if not t > 0.0:
        raise ParameterError(f"time must be positive, got {t}")
    return _isotropic_stable(p.alpha, p.d, t, rng, size)


def sample_mixed_increment(p: MixedStableParams, t: float, rng: np.random.Generator, size=None):
    """Increment of the mixed process over time ``t``.

    Independent sum of an alpha-stable increment and ``a`` times a
    beta-stable increment; characteristic function
    exp(-t(|xi|**alpha + a**beta |xi|**beta)).
    """
    if not t > 0.0:
        raise ParameterError(f"time must be positive, got {t}")
    out = _isotropic_stable(p.alpha, p.d, t, rng, size)
    if p.a > 0.0:
        out = out + p.a * _isotropic_stable(p.beta, p.d, t, rng, size)
    return out


def sample_subordinator_increment(p: MixedStableParams, t: float, rng: np.random.Generator, size=None):
    """Increment of the time-change subordinator over time ``t``.

    Laplace transform exp(-t(lambda + a**beta * lambda**(beta/alpha))): a
    unit drift plus a (beta/alpha)-stable jump part scaled by
    (a**beta * t)**(alpha/beta).  Every draw is >= t; at a = 0 the increment
    is exactly t (pure drift).
    """
    if not t > 0.0:
        raise ParameterError(f"time must be positive, got {t}")
    if p.a == 0.0:
        return t if size is None else np.full(int(size), float(t))
    scale = (p.a**p.beta * t) ** (p.alpha / p.beta)
    return t + scale * sample_positive_stable(p.beta / p.alpha, rng, size)
