"""Shared oracle utilities for the test suite."""

import numpy as np
from scipy.interpolate import PchipInterpolator

from mixedstable.density import free_density_cdf
from mixedstable.params import MixedStableParams


def oracle_cdf_interpolator(t: float, p: MixedStableParams, x_max: float = 1e4):
    """Monotone interpolant of the quadrature CDF, for KS tests on samples.

    Dense linear grid through the bulk, geometric extension into the tails;
    beyond ``x_max`` the CDF is clamped (the omitted tail mass is far below
    KS resolution at the sample sizes used here).
    """
    bulk = np.linspace(-50.0, 50.0, 1601)
    wing = np.geomspace(50.0, x_max, 120)[1:]
    grid = np.concatenate([-wing[::-1], bulk, wing])
    values = free_density_cdf(t, grid, p)
    interp = PchipInterpolator(grid, values, extrapolate=False)

    def cdf(x):
        x = np.asarray(x, dtype=float)
        out = interp(np.clip(x, grid[0], grid[-1]))
        return np.where(x < grid[0], 0.0, np.where(x > grid[-1], 1.0, out))

    return cdf


def ks_statistic(samples: np.ndarray, cdf) -> float:
    """One-sample Kolmogorov-Smirnov distance against a callable CDF."""
    xs = np.sort(np.asarray(samples, dtype=float))
    n = xs.size
    f = cdf(xs)
    upper = np.max(np.arange(1, n + 1) / n - f)
    lower = np.max(f - np.arange(0, n) / n)
    return float(max(upper, lower))
