import math
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from defectcyl import (
    EnergyLevel,
    PhysicalParams,
    analytic_limits,
    coupling_strength_parameter,
    excited_state,
    excited_state_exists,
    f_profile,
    g_profile,
    ground_state,
)

import oracles


def make_params(**overrides):
    base = dict(mass=0.5, coupling=1.0, half_separation=1.0, deficit=1.0, radius=5.0, hbar=1.0)
    base.update(overrides)
    return PhysicalParams(**base)


LOG_GRID = [10.0 ** (-6 + 9 * k / 60) for k in range(61)]  # 1e-6 .. 1e3


class TestProfiles:
    def test_f_at_zero(self):
        assert f_profile(0.0) == 0.0

    def test_f_large_argument(self):
        assert f_profile(50.0) == pytest.approx(50.0, rel=1e-15)

    def test_f_at_one(self):
        assert f_profile(1.0) == pytest.approx(1.0 / (1.0 + math.exp(-2.0)), rel=1e-15)
        assert f_profile(1.0) == pytest.approx(0.8807970779778823, rel=1e-14)

    def test_g_at_zero_removable_singularity(self):
        assert g_profile(0.0) == 0.5

    def test_g_large_argument(self):
        assert g_profile(50.0) == pytest.approx(50.0, rel=1e-15)

    def test_g_at_one(self):
        assert g_profile(1.0) == pytest.approx(1.0 / (1.0 - math.exp(-2.0)), rel=1e-15)
        assert g_profile(1.0) == pytest.approx(1.1565176427496657, rel=1e-14)

    def test_g_small_argument_expansion(self):
        for xi in (1e-12, 1e-9, 1e-8):
            assert g_profile(xi) == pytest.approx(0.5 + 0.5 * xi, rel=1e-12)

    def test_g_continuous_across_expansion_switch(self):
        below = g_profile(1e-8 * (1 - 1e-12))
        above = g_profile(1e-8 * (1 + 1e-12))
        assert below == pytest.approx(above, rel=1e-12)

    def test_f_bounds_on_log_grid(self):
        for xi in LOG_GRID:
            value = f_profile(xi)
            assert xi / 2.0 <= value <= xi
            if xi <= 17.0:  # above this exp(-2 xi) is below double resolution
                assert value < xi

    def test_g_bounds_on_log_grid(self):
        for xi in LOG_GRID:
            value = g_profile(xi)
            assert value >= 0.5
            assert xi <= value <= xi + 0.5
            if xi <= 17.0:
                assert value > max(0.5, xi) or xi < 1e-5
                assert value < xi + 0.5

    def test_profiles_strictly_increasing_on_grid(self):
        f_vals = [f_profile(x) for x in LOG_GRID]
        g_vals = [g_profile(x) for x in LOG_GRID]
        assert all(a < b for a, b in zip(f_vals, f_vals[1:]))
        assert all(a < b for a, b in zip(g_vals, g_vals[1:]))

    @given(st.floats(min_value=1e-6, max_value=100.0), st.floats(min_value=1.0001, max_value=2.0))
    def test_monotone_pairs(self, xi, factor):
        assert f_profile(xi * factor) > f_profile(xi)
        assert g_profile(xi * factor) > g_profile(xi)


class TestGroundState:
    def test_matches_bisection_oracle_at_half(self):
        p = make_params()  # c = 0.5
        c = coupling_strength_parameter(p)
        assert c == 0.5
        expected_xi = oracles.bisect(lambda t: f_profile(t) - c, 0.5, 1.0, xtol=1e-12)
        state = ground_state(p)
        assert state.xi == pytest.approx(expected_xi, abs=1e-10)
        assert state.energy == pytest.approx(
            -state.xi**2 * p.hbar**2 / (2 * p.mass * p.half_separation**2), rel=1e-15
        )

    def test_residual_below_tolerance(self):
        for z0 in (0.01, 0.3, 1.0, 7.0, 40.0):
            p = make_params(half_separation=z0)
            c = coupling_strength_parameter(p)
            assert abs(f_profile(ground_state(p).xi) - c) <= 1e-10

    def test_close_well_limit(self):
        # wells merging into one of double strength
        energies = [ground_state(make_params(half_separation=10.0**-k)).energy for k in range(2, 7)]
        errors = [abs(e + 1.0) for e in energies]
        assert errors[-1] < 1e-5
        assert all(b < a for a, b in zip(errors, errors[1:]))

    def test_far_well_limit(self):
        for k in (2, 3, 4):
            energy = ground_state(make_params(half_separation=10.0**k)).energy
            assert energy == pytest.approx(-0.25, rel=1e-10)

    def test_xi_energy_h_consistency(self):
        for z0 in (0.05, 0.5, 2.0, 30.0):
            p = make_params(half_separation=z0)
            s = ground_state(p)
            assert s.xi == pytest.approx(
                (p.half_separation / p.hbar) * math.sqrt(2.0 * p.mass * abs(s.energy)), rel=1e-10
            )
            assert s.h_factor == pytest.approx(
                abs(s.energy) * p.hbar**2 / (p.mass * p.coupling**2), rel=1e-12
            )

    def test_h_factor_range(self):
        for z0 in (1e-3, 0.1, 1.0, 5.0, 20.0):
            s = ground_state(make_params(half_separation=z0))
            assert 0.5 < s.h_factor < 2.0

    def test_monotone_increasing_in_separation(self):
        # strictly monotone while exp(-2 xi) is resolvable (c below ~18);
        # beyond that the energy saturates at the far-well plateau exactly
        z0s = [0.05 * 1.5**k for k in range(16)]
        energies = [ground_state(make_params(half_separation=z)).energy for z in z0s]
        assert all(a < b for a, b in zip(energies, energies[1:]))
        wide = [ground_state(make_params(half_separation=z)).energy for z in (50.0, 200.0)]
        assert all(e == pytest.approx(-0.25, rel=1e-12) for e in wide)

    def test_range_confinement(self):
        for z0 in (0.01, 0.7, 3.0, 100.0):
            p = make_params(half_separation=z0)
            e = ground_state(p).energy
            scale = p.mass * p.coupling**2 / p.hbar**2
            assert -2.0 * scale < e < -0.5 * scale or e == pytest.approx(-0.5 * scale, rel=1e-12)


class TestExcitedState:
    def test_absent_below_threshold(self):
        assert excited_state(make_params(half_separation=0.9)) is None
        assert not excited_state_exists(make_params(half_separation=0.9))

    def test_threshold_is_strict(self):
        # exactly at threshold the would-be level has zero binding
        assert excited_state(make_params(half_separation=1.0)) is None

    def test_matches_bisection_oracle_at_one(self):
        p = make_params(half_separation=2.0)  # c = 1
        expected_xi = oracles.bisect(lambda t: g_profile(t) - 1.0, 0.5, 1.0, xtol=1e-12)
        state = excited_state(p)
        assert state is not None
        assert state.xi == pytest.approx(expected_xi, abs=1e-10)

    def test_far_well_limit(self):
        for k in (2, 3, 4):
            state = excited_state(make_params(half_separation=10.0**k))
            assert state.energy == pytest.approx(-0.25, rel=1e-10)

    def test_existence_grid(self):
        for mass in (0.3, 0.5, 1.0, 1.7):
            for coupling in (0.4, 1.0, 2.0):
                for z0 in (0.1, 0.5, 1.2, 3.0, 8.0):
                    p = make_params(mass=mass, coupling=coupling, half_separation=z0)
                    state = excited_state(p)
                    exists = 2.0 * mass * z0 * coupling > 1.0 + 2e-12
                    assert (state is not None) == exists

    def test_near_threshold_expansion(self):
        delta = 1e-6
        p = make_params(half_separation=2.0 * (0.5 + delta))  # c = 0.5 + delta
        state = excited_state(p)
        assert state is not None
        assert state.xi == pytest.approx(2.0 * delta, rel=1e-2)
        assert -1e-10 < state.energy < 0.0

    def test_h_factor_range(self):
        for z0 in (1.1, 2.0, 6.0, 25.0):
            s = excited_state(make_params(half_separation=z0))
            assert 0.0 < s.h_factor < 0.5


class TestLevelStructure:
    def test_ordering_where_both_exist(self):
        for z0 in (1.5, 2.0, 8.0, 24.0):
            p = make_params(half_separation=z0)
            g = ground_state(p)
            e = excited_state(p)
            assert g.energy < e.energy < 0.0

    def test_ordering_saturates_at_extreme_separation(self):
        p = make_params(half_separation=64.0)
        assert ground_state(p).energy <= excited_state(p).energy < 0.0

    def test_gap_closes_monotonically(self):
        gaps = []
        for z0 in (1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0, 256.0):
            p = make_params(half_separation=z0)
            e = excited_state(p)
            if e is None:
                continue
            gaps.append(e.energy - ground_state(p).energy)
        assert len(gaps) == 8
        assert all(g > 0 or g == 0.0 for g in gaps)
        assert all(b <= a for a, b in zip(gaps, gaps[1:]))
        assert gaps[-1] <= 1e-6

    def test_excited_decreasing_in_separation(self):
        z0s = [1.2 * 1.5**k for k in range(12)]
        energies = [excited_state(make_params(half_separation=z)).energy for z in z0s]
        assert all(b <= a for a, b in zip(energies, energies[1:]))
        assert energies[1] < energies[0]

    def test_dimensionless_collapse(self):
        a = make_params(mass=0.5, coupling=2.0, half_separation=1.0)
        b = make_params(mass=1.0, coupling=1.0, half_separation=1.0)
        ga, gb = ground_state(a), ground_state(b)
        assert ga.xi == gb.xi
        assert ga.h_factor == gb.h_factor
        ratio = (a.mass * a.coupling**2) / (b.mass * b.coupling**2)
        assert ga.energy == pytest.approx(gb.energy * ratio, rel=1e-14)
        ea, eb = excited_state(a), excited_state(b)
        assert ea.xi == eb.xi
        assert ea.h_factor == eb.h_factor


class TestAnalyticLimits:
    def test_ground_limits_reference_convention(self):
        assert analytic_limits(make_params(), EnergyLevel.GROUND) == (-1.0, -0.25)

    def test_excited_limits_reference_convention(self):
        assert analytic_limits(make_params(), EnergyLevel.EXCITED) == (0.0, -0.25)

    def test_scaled_parameters(self):
        p = make_params(mass=1.0, coupling=2.0)
        assert analytic_limits(p, EnergyLevel.GROUND) == (-8.0, -2.0)

    def test_limits_bracket_solver_output(self):
        p = make_params(half_separation=0.37)
        close, far = analytic_limits(p, EnergyLevel.GROUND)
        assert close < ground_state(p).energy < far
