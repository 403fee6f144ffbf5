import math

import numpy as np
import pytest

import wdiam as w
from wdiam.diameter import equation_residual
from wdiam.regions import _r1_of_rest_sq


def _boundary_state():
    """(m=8, k=10, a/b=0.8) family with c exactly at its first critical value."""
    b_sq = 1.0 / (8 * 0.64 + 10)
    shape = np.repeat([0.64 * b_sq, b_sq], [8, 10])
    rho = _r1_of_rest_sq(shape)
    c_star = rho / math.sqrt(1.0 + rho * rho)
    return w.two_block_plus_one_state(8, 10, 0.8, c_star), c_star


class TestSymmetric:
    def test_w3_equal(self, w3_equal):
        # 3 sqrt(r^2 - 1/3) = r  =>  r^2 = 3/8
        sol = w.solve_symmetric(w3_equal)
        assert sol.branch is w.Branch.SYMMETRIC_EQ
        assert abs(sol.r**2 - 0.375) <= 1e-14
        assert abs(sol.residual) <= 1e-12

    def test_two_block_large_n_near_quarter(self):
        state = w.two_block_state(30, 30, math.pi / 4.0)
        sol = w.solve_symmetric(state)
        assert abs(sol.r**2 - 0.25) <= 1.0 / 30.0

    def test_boundary_returns_cmax(self):
        state, c_star = _boundary_state()
        sol = w.solve_symmetric(state, require_region=False)
        assert sol.r == pytest.approx(c_star, abs=1e-10)

    def test_wrong_region(self, slight_state):
        with pytest.raises(w.WrongRegion):
            w.solve_symmetric(slight_state)

    def test_r_at_least_cmax(self, rng):
        for _ in range(100):
            n = int(rng.integers(3, 64))
            state = w.sample_state_in_region(n, rng, w.Region.SYMMETRIC)
            sol = w.solve_symmetric(state)
            assert sol.r >= state.c_max
            assert abs(sol.residual) <= 1e-12 * n


class TestAsymmetric:
    def test_large_n_matches_closed_form(self):
        # c^2 = 0.4, tiny equal remainder: r ~ (1/2)(1-0.4)/sqrt(1-0.8)
        q = math.sqrt(0.6 / 99.0)
        state = w.make_wstate([q] * 99 + [math.sqrt(0.4)], renormalize=True)
        sol = w.solve_asymmetric(state)
        assert sol.branch is w.Branch.ASYMMETRIC_EQ
        assert abs(sol.r - 0.5 * 0.6 / math.sqrt(0.2)) <= 2e-3

    def test_lower_bound_approached(self):
        # c^2 slightly above 1/3 with a tiny remainder: r^2 -> 1/3
        c_sq = 1.0 / 3.0 + 1e-3
        q = math.sqrt((1.0 - c_sq) / 199.0)
        state = w.make_wstate([q] * 199 + [math.sqrt(c_sq)], renormalize=True)
        sol = w.solve_asymmetric(state)
        assert 1.0 / 3.0 - 1e-12 <= sol.r**2 <= 1.0 / 3.0 + 5e-3

    def test_divergence_growth(self):
        # r grows without bound as c_N^2 -> 1/2
        rs = []
        for eps in (1e-2, 1e-4, 1e-6):
            c_sq = 0.5 - eps
            q = math.sqrt((1.0 - c_sq) / 9.0)
            state = w.make_wstate([q] * 9 + [math.sqrt(c_sq)], renormalize=True)
            rs.append(w.solve_asymmetric(state).r)
        assert rs[0] < rs[1] < rs[2]
        assert rs[2] > 100.0

    def test_diverged_error_at_r2(self):
        eps = 2e-13
        c_sq = 0.5 - eps
        q = math.sqrt((1.0 - c_sq) / 2.0)
        state = w.make_wstate([q, q, math.sqrt(c_sq)], renormalize=True)
        with pytest.raises(w.DivergedToInfinity):
            w.solve_asymmetric(state)

    def test_wrong_region(self, w3_equal):
        with pytest.raises(w.WrongRegion):
            w.solve_asymmetric(w3_equal)

    def test_transformed_residual_small(self, rng):
        for _ in range(100):
            n = int(rng.integers(3, 64))
            state = w.sample_state_in_region(n, rng, w.Region.ASYMMETRIC)
            sol = w.solve_asymmetric(state)
            assert abs(sol.residual) <= 1e-12
            # raw equation residual: transformed residual times r
            assert abs(sol.residual) * sol.r <= 1e-12 * n
            assert sol.r >= state.c_max


class TestDispatch:
    def test_slight_no_diameter(self, slight_state):
        sol = w.solve(slight_state)
        assert sol.branch is w.Branch.NO_DIAMETER
        assert sol.r is None

    def test_symmetric_dispatch(self, w3_equal):
        assert w.solve(w3_equal).branch is w.Branch.SYMMETRIC_EQ

    def test_asymmetric_dispatch(self):
        q = math.sqrt(0.6 / 19.0)
        state = w.make_wstate([q] * 19 + [math.sqrt(0.4)], renormalize=True)
        assert w.solve(state).branch is w.Branch.ASYMMETRIC_EQ

    def test_continuity_at_r1(self):
        # both equations share the solution r = c_N at the crossing
        state, c_star = _boundary_state()
        r_sym = w.solve_symmetric(state, require_region=False).r
        r_asym = w.solve_asymmetric(state, require_region=False).r
        assert abs(r_sym - r_asym) <= 1e-8

    def test_equation_residual_checker(self, w3_equal):
        sol = w.solve(w3_equal)
        assert abs(equation_residual(w3_equal, sol.branch, sol.r)) <= 1e-12
        # a wrong r is flagged by a large residual
        assert abs(equation_residual(w3_equal, sol.branch, 0.9 * sol.r)) > 1e-3


class TestTheoremBounds:
    @pytest.mark.parametrize("region,lo,hi", [
        (w.Region.SYMMETRIC, 0.25, 0.5),
        (w.Region.ASYMMETRIC, 1.0 / 3.0, math.inf),
    ])
    def test_bounds_sampled(self, rng, region, lo, hi):
        for _ in range(300):
            n = int(rng.integers(3, 64))
            state = w.sample_state_in_region(n, rng, region)
            sol = w.solve(state)
            assert sol.r**2 >= lo - 1e-12
            assert sol.r**2 <= hi + 1e-12
