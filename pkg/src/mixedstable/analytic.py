"""Closed-form constants, jump intensities, and two-sided bound functions.

Everything here is a pure deterministic function of the parameters; no
randomness and no quadrature.  These are the "formula side" of every bound
check run by :mod:`mixedstable.verify`.
"""

from __future__ import annotations

import math

import numpy as np

from .params import MixedStableParams, ParameterError, SingularInputError, SpaceTimePoint

__all__ = [
    "stable_constant",
    "jump_intensity_ratio",
    "levy_density",
    "free_heat_kernel_bound",
    "dirichlet_heat_kernel_bound",
    "green_function_bound",
]


def stable_constant(d: int, alpha: float) -> float:
    """Normalising constant of the isotropic stable Levy density.

    For the process with characteristic exponent ``|xi|**alpha`` in dimension
    ``d``, the jump intensity at distance ``r`` is ``stable_constant(d, alpha)
    / r**(d + alpha)``.  The value is

        alpha * 2**(alpha-1) * pi**(-d/2) * Gamma((d+alpha)/2) / Gamma(1-alpha/2)

    and is strictly positive for ``0 < alpha < 2``.
    """
    if not (isinstance(d, (int, np.integer)) and d >= 1):
        raise ParameterError(f"dimension must be an integer >= 1, got {d!r}")
    if not 0.0 < alpha < 2.0:
        raise ParameterError(f"alpha must lie in (0, 2), got {alpha}")
    return (
        alpha
        * 2.0 ** (alpha - 1.0)
        * math.pi ** (-d / 2.0)
        * math.gamma((d + alpha) / 2.0)
        / math.gamma(1.0 - alpha / 2.0)
    )


def jump_intensity_ratio(r, p: MixedStableParams):
    """Ratio of the mixed jump intensity to the pure alpha-stable one.

    Equals ``1 + a**beta * (A_beta / A_alpha) * r**(alpha - beta)`` where
    ``A_gamma = stable_constant(d, gamma)``.  Always >= 1, nondecreasing in
    both ``r`` and ``a``.  Accepts scalars or arrays, ``r >= 0``.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r < 0.0):
        raise ParameterError("r must be >= 0")
    if p.a == 0.0:
        out = np.ones_like(r)
        return float(out) if out.ndim == 0 else out
    coef = p.a**p.beta * stable_constant(p.d, p.beta) / stable_constant(p.d, p.alpha)
    out = 1.0 + coef * r ** (p.alpha - p.beta)
    return float(out) if out.ndim == 0 else out


def levy_density(r, p: MixedStableParams):
    """Jump intensity of the mixed process at distance ``r > 0``.

    ``A_alpha / r**(d+alpha) + a**beta * A_beta / r**(d+beta)``; strictly
    decreasing in ``r``.  Accepts scalars or arrays.
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.0):
        raise ParameterError("r must be > 0")
    out = stable_constant(p.d, p.alpha) / r ** (p.d + p.alpha)
    if p.a > 0.0:
        out = out + p.a**p.beta * stable_constant(p.d, p.beta) / r ** (p.d + p.beta)
    return float(out) if out.ndim == 0 else out


def free_heat_kernel_bound(t: float, r: float, p: MixedStableParams) -> float:
    """Two-sided comparison function for the free-space transition density.

    ``min((a**beta * t)**(-d/beta), t**(-d/alpha))`` capped by the
    off-diagonal term ``t/r**(d+alpha) + a**beta * t/r**(d+beta)``.  At
    ``r = 0`` the off-diagonal term is infinite and the on-diagonal minimum is
    returned; at ``a = 0`` the beta terms drop out and the pure stable form
    ``min(t**(-d/alpha), t/r**(d+alpha))`` is recovered.
    """
    if not t > 0.0:
        raise ParameterError(f"time must be positive, got {t}")
    if r < 0.0:
        raise ParameterError("r must be >= 0")
    on_diag = t ** (-p.d / p.alpha)
    if p.a > 0.0:
        on_diag = min(on_diag, (p.a**p.beta * t) ** (-p.d / p.beta))
    if r == 0.0:
        return on_diag
    off_diag = t / r ** (p.d + p.alpha)
    if p.a > 0.0:
        off_diag += p.a**p.beta * t / r ** (p.d + p.beta)
    return min(on_diag, off_diag)


def dirichlet_heat_kernel_bound(pt: SpaceTimePoint, p: MixedStableParams) -> float:
    """Two-sided comparison function for the killed transition density.

    Product of the two boundary factors ``min(1, delta**(alpha/2)/sqrt(t))``
    and the interior factor ``min(t**(-d/alpha), t/r**(d+alpha) +
    a**beta*t/r**(d+beta))``.  Symmetric under swapping the two points;
    vanishes exactly when either distance to the complement is zero.
    """
    t = pt.t
    bx = min(1.0, pt.delta_x ** (p.alpha / 2.0) / math.sqrt(t))
    by = min(1.0, pt.delta_y ** (p.alpha / 2.0) / math.sqrt(t))
    if bx == 0.0 or by == 0.0:
        return 0.0
    r = pt.r
    interior = t ** (-p.d / p.alpha)
    if r > 0.0:
        off_diag = t / r ** (p.d + p.alpha)
        if p.a > 0.0:
            off_diag += p.a**p.beta * t / r ** (p.d + p.beta)
        interior = min(interior, off_diag)
    return bx * by * interior


def green_function_bound(
    r: float, delta_x: float, delta_y: float, p: MixedStableParams
) -> float:
    """Two-sided comparison function for the Green function of the killed
    process in a bounded domain.

    Three branches depending on how ``d`` compares with ``alpha``:

    * ``d > alpha``:   ``min(1, (dx*dy)**(alpha/2) / r**alpha) * r**(alpha-d)``
    * ``d == 1 == alpha``: ``log(1 + (dx*dy)**(alpha/2) / r**alpha)``
    * ``d == 1 < alpha``:  ``min((dx*dy)**((alpha-1)/2),
      (dx*dy)**(alpha/2) / r)``

    where ``dx, dy`` are the distances of the two points to the complement.
    The weight ``a`` does not enter; the claim under test is precisely that
    the Green function is comparable to this ``a``-free shape uniformly in
    the weight.
    """
    if r < 0.0 or delta_x < 0.0 or delta_y < 0.0:
        raise ParameterError("r and the boundary distances must be >= 0")
    boundary = (delta_x * delta_y) ** (p.alpha / 2.0)
    if p.d > p.alpha:
        if r == 0.0:
            raise SingularInputError("Green bound is +inf at coinciding points for d > alpha")
        return min(1.0, boundary / r**p.alpha) * r ** (p.alpha - p.d)
    if p.d == 1 and p.alpha == 1.0:
        if r == 0.0:
            if boundary == 0.0:
                return 0.0
            raise SingularInputError("Green bound is +inf at coinciding points for d = alpha")
        return math.log1p(boundary / r**p.alpha)
    if p.d == 1 and p.alpha > 1.0:
        near = (delta_x * delta_y) ** ((p.alpha - 1.0) / 2.0)
        if r == 0.0:
            return near
        return min(near, boundary / r)
    raise ParameterError(
        f"unsupported branch: d={p.d}, alpha={p.alpha} (need d > alpha or d = 1)"
    )
