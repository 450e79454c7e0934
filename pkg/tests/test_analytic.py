import math

import numpy as np
import pytest

from mixedstable.analytic import (
    dirichlet_heat_kernel_bound,
    free_heat_kernel_bound,
    green_function_bound,
    jump_intensity_ratio,
    levy_density,
    stable_constant,
)
from mixedstable.params import (
    MixedStableParams,
    ParameterError,
    SingularInputError,
    SpaceTimePoint,
)

P = MixedStableParams(d=1, alpha=1.5, beta=0.5, a=1.0)


def random_params(rng):
    alpha = rng.uniform(0.3, 1.9)
    beta = rng.uniform(0.1, 0.95) * alpha
    return MixedStableParams(
        d=int(rng.integers(1, 4)), alpha=alpha, beta=beta, a=rng.uniform(0.0, 2.0)
    )


class TestStableConstant:
    def test_one_dim_cauchy(self):
        # matches the known 1-d Cauchy jump intensity (1/pi) r**-2
        assert stable_constant(1, 1.0) == pytest.approx(1.0 / math.pi, rel=1e-14)

    def test_two_dim_alpha_one(self):
        assert stable_constant(2, 1.0) == pytest.approx(1.0 / (2.0 * math.pi), rel=1e-13)

    def test_vanishes_as_alpha_to_zero(self):
        assert stable_constant(1, 1e-12) < 1e-11

    def test_positive_on_grid(self):
        for d in (1, 2, 3):
            for alpha in np.linspace(0.05, 1.95, 20):
                assert stable_constant(d, float(alpha)) > 0.0

    def test_rejects_bad_alpha(self):
        with pytest.raises(ParameterError):
            stable_constant(1, 2.0)
        with pytest.raises(ParameterError):
            stable_constant(1, 0.0)
        with pytest.raises(ParameterError):
            stable_constant(0, 1.0)


class TestJumpIntensityRatio:
    def test_weight_zero_is_one(self):
        p0 = P.with_weight(0.0)
        assert jump_intensity_ratio(3.7, p0) == 1.0

    def test_r_zero_is_one(self):
        assert jump_intensity_ratio(0.0, P) == 1.0

    def test_frozen_value(self):
        # 1 + A(1,-0.5)/A(1,-1.5); the Gamma ratio collapses to 2/3 exactly
        a_beta = stable_constant(1, 0.5)
        a_alpha = stable_constant(1, 1.5)
        assert a_beta / a_alpha == pytest.approx(2.0 / 3.0, rel=1e-14)
        assert jump_intensity_ratio(1.0, P) == pytest.approx(5.0 / 3.0, rel=1e-14)

    def test_monotone_in_r_and_a(self):
        rng = np.random.default_rng(1)
        for _ in range(50):
            p = random_params(rng)
            rs = np.sort(rng.uniform(0.0, 10.0, size=8))
            vals = jump_intensity_ratio(rs, p)
            assert np.all(vals >= 1.0)
            assert np.all(np.diff(vals) >= -1e-15)
            r = rng.uniform(0.1, 5.0)
            lo = jump_intensity_ratio(r, p.with_weight(0.3))
            hi = jump_intensity_ratio(r, p.with_weight(1.7))
            assert hi >= lo


class TestLevyDensity:
    def test_pure_cauchy_at_one(self):
        p0 = MixedStableParams(d=1, alpha=1.0, beta=0.5, a=0.0)
        assert levy_density(1.0, p0) == pytest.approx(1.0 / math.pi, rel=1e-14)

    def test_factorisation_identity(self):
        # levy_density(r) = (A_alpha / r**(d+alpha)) * jump_intensity_ratio(r)
        rng = np.random.default_rng(2)
        for _ in range(1000):
            p = random_params(rng)
            r = rng.uniform(1e-3, 50.0)
            lhs = levy_density(r, p)
            rhs = (
                stable_constant(p.d, p.alpha)
                / r ** (p.d + p.alpha)
                * jump_intensity_ratio(r, p)
            )
            assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_strictly_decreasing(self):
        assert levy_density(2.0, P) < levy_density(1.0, P)
        rs = np.linspace(0.05, 20.0, 200)
        vals = levy_density(rs, P)
        assert np.all(np.diff(vals) < 0.0)

    def test_rejects_nonpositive_r(self):
        with pytest.raises(ParameterError):
            levy_density(0.0, P)
        with pytest.raises(ParameterError):
            levy_density(-1.0, P)


class TestFreeBound:
    def test_on_diagonal_unit_time(self):
        assert free_heat_kernel_bound(1.0, 0.0, P) == 1.0

    def test_weight_zero_recovers_pure_form(self):
        p0 = P.with_weight(0.0)
        for t in (0.1, 1.0, 10.0):
            for r in (0.0, 0.5, 2.0, 25.0):
                expected = t ** (-1.0 / p0.alpha)
                if r > 0.0:
                    expected = min(expected, t / r ** (1.0 + p0.alpha))
                assert free_heat_kernel_bound(t, r, p0) == pytest.approx(expected, rel=1e-15)

    def test_frozen_off_diagonal_value(self):
        # min(1, 10**-2.5 + 10**-1.5) evaluated directly
        assert free_heat_kernel_bound(1.0, 10.0, P) == pytest.approx(
            0.03478505426185217, rel=1e-14
        )

    def test_rejects_bad_time(self):
        with pytest.raises(ParameterError):
            free_heat_kernel_bound(0.0, 1.0, P)


class TestDirichletBound:
    def test_zero_on_boundary(self):
        pt = SpaceTimePoint(1.0, [0.9], [0.0], delta_x=0.0, delta_y=1.0)
        assert dirichlet_heat_kernel_bound(pt, P) == 0.0

    def test_clamped_equals_interior_factor(self):
        # both boundary factors clamp to 1 once delta**(alpha/2) >= sqrt(t)
        t, r = 0.5, 0.3
        pt = SpaceTimePoint(t, [0.0], [r], delta_x=2.0, delta_y=2.0)
        interior = min(
            t ** (-1.0 / P.alpha),
            t / r ** (1.0 + P.alpha) + P.a**P.beta * t / r ** (1.0 + P.beta),
        )
        assert dirichlet_heat_kernel_bound(pt, P) == pytest.approx(interior, rel=1e-15)

    def test_symmetry_and_monotonicity(self):
        rng = np.random.default_rng(3)
        for _ in range(200):
            p = random_params(rng)
            pt = SpaceTimePoint(
                float(rng.uniform(0.05, 5.0)),
                rng.uniform(-1, 1, size=p.d),
                rng.uniform(-1, 1, size=p.d),
                delta_x=float(rng.uniform(0.0, 2.0)),
                delta_y=float(rng.uniform(0.0, 2.0)),
            )
            v = dirichlet_heat_kernel_bound(pt, p)
            assert dirichlet_heat_kernel_bound(pt.swapped(), p) == pytest.approx(
                v, abs=1e-15, rel=1e-15
            )
            bigger = SpaceTimePoint(pt.t, pt.x, pt.y, pt.delta_x * 1.5 + 0.01, pt.delta_y)
            assert dirichlet_heat_kernel_bound(bigger, p) >= v

    def test_dominated_by_free_interior(self):
        pt = SpaceTimePoint(0.7, [0.1], [0.4], delta_x=0.2, delta_y=0.9)
        free_interior = min(
            pt.t ** (-1.0 / P.alpha),
            pt.t / pt.r ** (1 + P.alpha) + P.a**P.beta * pt.t / pt.r ** (1 + P.beta),
        )
        assert dirichlet_heat_kernel_bound(pt, P) <= free_interior


class TestGreenBound:
    def test_far_branch_clamps(self):
        p = MixedStableParams(d=2, alpha=1.5, beta=0.5, a=1.0)
        # (dx*dy)**(alpha/2) >= r**alpha forces the min to 1
        assert green_function_bound(0.5, 2.0, 2.0, p) == pytest.approx(
            0.5 ** (p.alpha - 2), rel=1e-15
        )

    def test_log_branch_zero_on_boundary(self):
        p = MixedStableParams(d=1, alpha=1.0, beta=0.5, a=0.5)
        assert green_function_bound(0.4, 0.0, 1.0, p) == 0.0

    def test_third_branch_frozen_value(self):
        assert green_function_bound(10.0, 1.0, 1.0, P) == pytest.approx(0.1, rel=1e-15)

    def test_symmetric_in_deltas(self):
        rng = np.random.default_rng(4)
        for _ in range(100):
            p = random_params(rng)
            r, dx, dy = rng.uniform(0.05, 3.0, size=3)
            assert green_function_bound(r, dx, dy, p) == pytest.approx(
                green_function_bound(r, dy, dx, p), rel=1e-14
            )

    def test_far_branch_upper_envelope(self):
        rng = np.random.default_rng(5)
        for _ in range(200):
            alpha = rng.uniform(0.3, 1.9)
            d = int(rng.integers(1, 4))
            if d <= alpha:
                d = 2 if alpha < 2 else 3
            p = MixedStableParams(d=d, alpha=alpha, beta=alpha / 2, a=rng.uniform(0, 2))
            r, dx, dy = rng.uniform(0.01, 5.0, size=3)
            g = green_function_bound(r, dx, dy, p)
            assert 0.0 <= g <= r ** (p.alpha - p.d) * (1 + 1e-12)

    def test_singular_origin(self):
        p = MixedStableParams(d=2, alpha=1.5, beta=0.5, a=1.0)
        with pytest.raises(SingularInputError):
            green_function_bound(0.0, 1.0, 1.0, p)
