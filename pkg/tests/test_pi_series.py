"""Tests for the Wallis product, Gregory-Leibniz, the log(pi/2) series,
and the Buffon needle estimator."""

import math
from fractions import Fraction

import numpy as np
import pytest

from wallislab.numkit import reference_constant
from wallislab.pi_series import (
    BuffonConfig,
    ZeroCrossingsError,
    buffon_crossings,
    buffon_estimate,
    gregory_leibniz,
    gregory_leibniz_partial_sums,
    log_pi_over_2_bernoulli,
    log_pi_over_2_bernoulli_term,
    log_pi_over_2_zeta,
    log_pi_over_2_zeta_term,
    student_t_limit_estimate,
    wallis_estimate,
    wallis_identity_check,
    wallis_partial,
    wallis_sequence,
)


class TestWallisPartial:
    def test_first_partial_products(self):
        assert wallis_partial(1).exact == Fraction(4, 3)
        assert wallis_partial(2).exact == Fraction(64, 45)
        assert wallis_partial(3).exact == Fraction(256, 175)

    def test_telescoped_form_matches_stepwise_product(self):
        product = Fraction(1)
        for n in range(1, 40):
            product *= Fraction(4 * n * n, 4 * n * n - 1)
            assert wallis_partial(n).exact == product

    def test_monotone_bracketing(self):
        half_pi = float(reference_constant("pi", 50)) / 2
        previous = 0.0
        for _, value in wallis_sequence(2000):
            v = float(value)
            assert previous < v < half_pi
            previous = v

    def test_estimate_bound_is_rigorous(self):
        half_pi = float(reference_constant("pi", 50)) / 2
        for m in (1, 5, 100, 1000):
            est = wallis_estimate(m)
            assert abs(float(est.estimate) - half_pi) <= float(est.abs_error_bound)

    def test_invalid_m(self):
        with pytest.raises(ValueError):
            wallis_partial(0)


class TestWallisIdentity:
    def test_hand_checked_cases(self):
        # m=1: 4/3 = 1/(6 * 1/8); m=2: 64/45 = 2/(10 * 9/64).
        assert wallis_identity_check(1)
        assert wallis_identity_check(2)

    @pytest.mark.parametrize("m", [3, 10, 100, 200])
    def test_exact_pipeline(self, m):
        assert wallis_identity_check(m)


class TestGregoryLeibniz:
    def test_zero_terms(self):
        result = gregory_leibniz(0)
        assert float(result.estimate) == 1.0
        assert abs(float(result.abs_error_bound) - 1 / 3) < 1e-15

    def test_one_extra_term(self):
        result = gregory_leibniz(1)
        assert abs(float(result.estimate) - 2 / 3) < 1e-15
        assert abs(float(result.abs_error_bound) - 1 / 5) < 1e-15

    def test_million_terms_near_quarter_pi(self):
        result = gregory_leibniz(10**6)
        quarter_pi = float(reference_constant("pi", 50)) / 4
        assert abs(float(result.estimate) - quarter_pi) < 1e-6
        assert abs(float(result.estimate) - quarter_pi) <= float(result.abs_error_bound)

    def test_alternating_bracket(self):
        quarter_pi = float(reference_constant("pi", 50)) / 4
        sums = gregory_leibniz_partial_sums(10**5)
        above = sums[0::2]
        below = sums[1::2]
        assert np.all(above > quarter_pi)
        assert np.all(below < quarter_pi)
        # The target stays between consecutive partial sums.
        lo = np.minimum(sums[:-1], sums[1:])
        hi = np.maximum(sums[:-1], sums[1:])
        assert np.all((lo < quarter_pi) & (quarter_pi < hi))


class TestLogPiOverTwo:
    def test_single_zeta_term_is_pi_squared_over_24(self):
        result = log_pi_over_2_zeta(1)
        pi = reference_constant("pi", 50)
        assert abs(float(result.estimate - pi * pi / 24)) < 1e-45
        assert result.estimate.to_decimal_string().startswith("0.4112335167")

    def test_two_terms(self):
        result = log_pi_over_2_zeta(2)
        # Second summand is zeta(4)/32 = pi^4/2880.
        pi = reference_constant("pi", 50)
        expected = pi * pi / 24 + pi ** 4 / 2880
        assert abs(float(result.estimate - expected)) < 1e-45

    def test_twenty_terms_close_to_reference(self):
        target = reference_constant("log_pi_over_2", 50)
        result = log_pi_over_2_zeta(20)
        assert abs(float(result.estimate - target)) <= 2e-12

    def test_error_bound_is_rigorous(self):
        target = reference_constant("log_pi_over_2", 50)
        for k in (1, 2, 5, 10, 30):
            result = log_pi_over_2_zeta(k)
            assert abs(float(result.estimate - target)) <= float(result.abs_error_bound)

    def test_dual_forms_agree_termwise(self):
        for k in range(1, 41):
            za = log_pi_over_2_zeta_term(k)
            zb = log_pi_over_2_bernoulli_term(k)
            assert abs(float(za - zb)) <= 1e-40

    def test_dual_partial_sums_agree(self):
        a = log_pi_over_2_zeta(20)
        b = log_pi_over_2_bernoulli(20)
        assert abs(float(a.estimate - b.estimate)) <= 1e-40

    def test_digit_rate_base_four(self):
        target = reference_constant("log_pi_over_2", 50)
        errors = {
            k: abs(float(log_pi_over_2_zeta(k).estimate - target))
            for k in range(2, 42)
        }
        for k in range(2, 41):
            assert errors[k + 1] <= errors[k] / 4

    def test_term_cap(self):
        with pytest.raises(ValueError):
            log_pi_over_2_zeta(251)
        with pytest.raises(ValueError):
            log_pi_over_2_zeta(0)


class TestStudentTLimitEstimate:
    def test_decreases_to_pi_from_above(self):
        pi = float(reference_constant("pi", 50))
        values = [float(student_t_limit_estimate(m).estimate) for m in (1, 10, 100, 500)]
        assert all(v > pi for v in values)
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_bound_is_rigorous(self):
        pi = float(reference_constant("pi", 50))
        for m in (1, 10, 100):
            est = student_t_limit_estimate(m)
            assert abs(float(est.estimate) - pi) <= float(est.abs_error_bound)


class TestBuffon:
    def test_needle_longer_than_gap_rejected(self):
        with pytest.raises(ValueError):
            BuffonConfig(2.0, 1.0, 100)

    def test_deterministic_per_seed(self):
        config = BuffonConfig(1.0, 1.0, 50_000, 42)
        first = buffon_estimate(config)
        second = buffon_estimate(config)
        assert first.estimate.value == second.estimate.value
        assert first.terms_used == second.terms_used

    def test_different_seeds_differ(self):
        a = buffon_estimate(BuffonConfig(1.0, 1.0, 50_000, 1))
        b = buffon_estimate(BuffonConfig(1.0, 1.0, 50_000, 2))
        assert a.terms_used != b.terms_used

    def test_crossing_frequency_near_two_over_pi(self):
        config = BuffonConfig(1.0, 1.0, 10**6, 42)
        frequency = buffon_crossings(config) / config.throws
        assert abs(frequency - 2 / math.pi) < 0.002

    def test_estimate_within_reported_bound(self):
        config = BuffonConfig(1.0, 1.0, 10**6, 42)
        result = buffon_estimate(config)
        pi = float(reference_constant("pi", 50))
        assert abs(float(result.estimate) - pi) <= float(result.abs_error_bound)
        assert float(result.abs_error_bound) < 0.02

    def test_short_needle_scales(self):
        result = buffon_estimate(BuffonConfig(0.5, 1.0, 10**6, 7))
        pi = float(reference_constant("pi", 50))
        assert abs(float(result.estimate) - pi) <= float(result.abs_error_bound)

    def test_zero_crossings_error(self):
        # A vanishingly short needle essentially never crosses.
        with pytest.raises(ZeroCrossingsError):
            buffon_estimate(BuffonConfig(1e-12, 1.0, 10, 3))
