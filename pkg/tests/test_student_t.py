"""Tests for the Student-t density, its normalization constant, and the
approach to the standard normal."""

from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wallislab.numkit import double_factorial, factorial, reference_constant
from wallislab.student_t import (
    StudentTParams,
    integrate_density,
    limit_study,
    normal_density,
    normalization_constant,
    t_density,
)


class TestDensity:
    def test_cauchy_at_zero_is_one_over_pi(self):
        # c_1 = Gamma(1) / (sqrt(pi) Gamma(1/2)) = 1/pi.
        value = t_density(StudentTParams(1), 0)
        pi = reference_constant("pi", 50)
        assert abs(float(value - 1 / pi)) < 1e-45

    def test_nu_two_at_zero(self):
        # c_2 = 1/(2 sqrt(2)) ~ 0.3535533906.
        value = t_density(StudentTParams(2), 0)
        assert value.to_decimal_string().startswith("0.353553390593")

    def test_cauchy_at_one_is_one_over_two_pi(self):
        value = t_density(StudentTParams(1), 1)
        pi = reference_constant("pi", 50)
        assert abs(float(value - 1 / (2 * pi))) < 1e-45

    @given(st.floats(min_value=-50, max_value=50, allow_nan=False), st.integers(1, 30))
    def test_symmetric_and_positive(self, t, nu):
        params = StudentTParams(nu)
        plus = t_density(params, t, 30)
        minus = t_density(params, -t, 30)
        assert plus.value == minus.value
        assert float(plus) > 0

    def test_invalid_nu(self):
        with pytest.raises(ValueError):
            StudentTParams(0)


class TestNormalDensity:
    def test_peak_value(self):
        assert normal_density(0).to_decimal_string().startswith("0.3989422804")

    def test_at_one(self):
        assert normal_density(1).to_decimal_string().startswith("0.2419707245")

    def test_symmetry(self):
        for x in (0.3, 1.7, 5.0):
            assert normal_density(x).value == normal_density(-x).value


class TestNormalizationConstant:
    def test_even_two(self):
        nc = normalization_constant(2)
        assert nc.exact_squared == Fraction(1, 8)

    def test_even_four(self):
        nc = normalization_constant(4)
        assert nc.exact_squared == Fraction(9, 64)

    def test_odd_one_is_one_over_pi(self):
        nc = normalization_constant(1)
        pi = reference_constant("pi", 50)
        assert abs(float(nc.numeric - 1 / pi)) < 1e-45
        assert nc.exact_squared is None

    @pytest.mark.parametrize("nu", range(2, 401, 2))
    def test_exactness_bridge(self, nu):
        m = nu // 2
        nc = normalization_constant(nu)
        # Gamma-ratio form ((2m-1)!! sqrt(pi) / 2^m)^2 / (2 pi m ((m-1)!)^2).
        gamma_form = Fraction(
            double_factorial(2 * m - 1) ** 2, 4**m * 2 * m * factorial(m - 1) ** 2
        )
        assert nc.exact_squared == gamma_form
        numeric_sq = float(nc.numeric * nc.numeric)
        assert abs(numeric_sq - float(gamma_form)) <= 1e-40 * max(1.0, numeric_sq)


class TestIntegrateDensity:
    @pytest.mark.parametrize("nu", [1, 2, 50])
    def test_mass_is_one(self, nu):
        result = integrate_density(nu, 1e-12)
        assert abs(float(result.estimate) - 1.0) <= 1e-12

    @pytest.mark.parametrize("nu", range(1, 101))
    def test_mass_within_acceptance_band(self, nu):
        result = integrate_density(nu, 1e-12)
        assert abs(float(result.estimate) - 1.0) <= 1e-10

    def test_tolerance_floor(self):
        with pytest.raises(ValueError):
            integrate_density(2, 1e-15)


class TestLimitStudy:
    def test_scaled_constant_at_two(self):
        rows = limit_study(2)
        row = next(r for r in rows if r.nu == 2)
        # c_2 sqrt(2 pi) = sqrt(pi)/2.
        sqrt_pi = reference_constant("sqrt_pi", 50)
        assert abs(float(row.c_scaled - sqrt_pi / 2)) < 1e-45

    def test_monotone_approach_and_half_nu_bound(self):
        rows = limit_study(1000)
        scaled = [float(r.c_scaled) for r in rows if r.nu >= 2]
        assert all(a < b for a, b in zip(scaled, scaled[1:]))
        for r in rows:
            if r.nu >= 10:
                assert abs(float(r.c_scaled) - 1.0) <= 1 / (2 * r.nu)

    def test_sup_distance_small_at_thousand(self):
        rows = limit_study(1000)
        assert rows[-1].nu == 1000
        assert rows[-1].sup_distance < 1e-3

    def test_pointwise_limit_at_fixed_points(self):
        phi = {t: float(normal_density(t, 30)) for t in (0, 1, 2)}
        gaps = {t: [] for t in (0, 1, 2)}
        for nu in (10, 30, 100, 300, 1000, 10000):
            params = StudentTParams(nu)
            for t in (0, 1, 2):
                gaps[t].append(abs(float(t_density(params, t, 30)) - phi[t]))
        for t in (0, 1, 2):
            assert all(a > b for a, b in zip(gaps[t], gaps[t][1:]))
            assert gaps[t][-1] < 1e-4

    def test_nu_max_floor(self):
        with pytest.raises(ValueError):
            limit_study(1)
