"""Tests for exact and numeric Gamma, Beta, and the cosine moments."""

import math
from fractions import Fraction

import numpy as np
import pytest

from wallislab.gammafn import (
    BetaValue,
    HalfInteger,
    beta,
    beta_trig_identity_check,
    cosine_moment_recursive,
    gamma_half_integer,
    gamma_numeric,
    lemma_check,
)
from wallislab.numkit import PrecisionReal, double_factorial


class TestGammaHalfInteger:
    def test_one_half_gives_sqrt_pi(self):
        g = gamma_half_integer(HalfInteger(1))
        assert g.rational_part == 1 and g.sqrt_pi_power == 1

    def test_integer_arguments_give_factorials(self):
        g = gamma_half_integer(HalfInteger(10))  # x = 5
        assert g.rational_part == 24 and g.sqrt_pi_power == 0

    def test_five_halves(self):
        # Two recursion steps up from Gamma(1/2): (3/2)(1/2) sqrt(pi).
        g = gamma_half_integer(HalfInteger(5))
        assert g.rational_part == Fraction(3, 4) and g.sqrt_pi_power == 1

    @pytest.mark.parametrize("twice", range(1, 201))
    def test_recursion_consistency(self, twice):
        x = HalfInteger(twice)
        up = gamma_half_integer(x + 1)
        down = gamma_half_integer(x)
        assert up.rational_part == x.as_fraction * down.rational_part
        assert up.sqrt_pi_power == down.sqrt_pi_power

    def test_closed_form_at_odd_half_integers(self):
        for m in range(0, 50):
            g = gamma_half_integer(HalfInteger(2 * m + 1))
            assert g.rational_part == Fraction(double_factorial(2 * m - 1), 2**m)
            assert g.sqrt_pi_power == 1

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            HalfInteger(0)


class TestGammaNumeric:
    def test_half_matches_sqrt_pi(self):
        value = gamma_numeric(0.5, 20)
        assert value.to_decimal_string().startswith("1.7724538509")

    def test_one_is_one(self):
        assert abs(float(gamma_numeric(1, 30)) - 1.0) < 1e-25

    def test_three_point_five(self):
        # Oracle: the exact path gives (5/2)(3/2)(1/2) sqrt(pi).
        exact = gamma_half_integer(HalfInteger(7)).to_precision_real(50)
        approx = gamma_numeric(Fraction(7, 2), 50)
        assert abs(float(approx - exact)) < 1e-40
        assert approx.to_decimal_string().startswith("3.3233509704")

    @pytest.mark.parametrize("twice", range(1, 101))
    def test_relative_error_contract_at_half_integers(self, twice):
        exact = gamma_half_integer(HalfInteger(twice)).to_precision_real(50)
        approx = gamma_numeric(Fraction(twice, 2), 50)
        rel = abs(float((approx - exact) / exact))
        assert rel <= 1e-12

    def test_nonpositive_rejected(self):
        with pytest.raises(ValueError):
            gamma_numeric(0.0)
        with pytest.raises(ValueError):
            gamma_numeric(-1.5)

    def test_precision_taken_from_precision_real_argument(self):
        x = PrecisionReal.from_rational(Fraction(3, 2), 25)
        assert gamma_numeric(x).digits == 25


class TestBeta:
    def test_half_half_is_pi(self):
        assert beta(HalfInteger(1), HalfInteger(1)) == BetaValue(Fraction(1), 1)

    def test_one_one_is_one(self):
        assert beta(HalfInteger(2), HalfInteger(2)) == BetaValue(Fraction(1), 0)

    def test_three_halves_one_half_is_half_pi(self):
        assert beta(HalfInteger(3), HalfInteger(1)) == BetaValue(Fraction(1, 2), 1)

    def test_symmetry(self):
        for p, q in [(1, 3), (2, 5), (4, 4), (7, 2)]:
            assert beta(HalfInteger(p), HalfInteger(q)) == beta(
                HalfInteger(q), HalfInteger(p)
            )


class TestCosineMoments:
    def test_base_cases(self):
        zero = cosine_moment_recursive(0)
        assert (zero.rational_part, zero.pi_power) == (Fraction(1, 2), 1)
        one = cosine_moment_recursive(1)
        assert (one.rational_part, one.pi_power) == (Fraction(1), 0)

    def test_n_two_is_quarter_pi(self):
        m = cosine_moment_recursive(2)
        assert (m.rational_part, m.pi_power) == (Fraction(1, 4), 1)

    def test_n_five_against_quadrature_oracle(self):
        m = cosine_moment_recursive(5)
        assert (m.rational_part, m.pi_power) == (Fraction(8, 15), 0)
        xs, ws = np.polynomial.legendre.leggauss(64)
        half = math.pi / 4
        numeric = half * float(np.dot(ws, np.cos(half * (xs + 1)) ** 5))
        assert abs(numeric - 8 / 15) < 1e-12

    @pytest.mark.parametrize("n", range(0, 401))
    def test_closed_form(self, n):
        m = cosine_moment_recursive(n)
        ratio = Fraction(double_factorial(n - 1), double_factorial(n))
        if n % 2 == 0:
            assert (m.rational_part, m.pi_power) == (ratio / 2, 1)
        else:
            assert (m.rational_part, m.pi_power) == (ratio, 0)

    def test_strictly_decreasing_within_parity(self):
        evens = [cosine_moment_recursive(n).rational_part for n in range(0, 60, 2)]
        odds = [cosine_moment_recursive(n).rational_part for n in range(1, 60, 2)]
        assert all(a > b for a, b in zip(evens, evens[1:]))
        assert all(a > b for a, b in zip(odds, odds[1:]))


class TestLemma:
    def test_hand_checked_cases(self):
        # nu = 1: both sides equal pi; nu = 2: both sides equal 2 sqrt(2).
        assert lemma_check(1)
        assert lemma_check(2)
        assert lemma_check(50)

    @pytest.mark.parametrize("nu", range(1, 201))
    def test_exact_over_range(self, nu):
        assert lemma_check(nu)

    def test_invalid_nu(self):
        with pytest.raises(ValueError):
            lemma_check(0)


class TestBetaTrigIdentity:
    @pytest.mark.parametrize("m,n", [(0, 0), (1, 0), (2, 3), (0, 5), (10, 10)])
    def test_pairs(self, m, n):
        assert beta_trig_identity_check(m, n)

    def test_exponent_cap(self):
        with pytest.raises(ValueError):
            beta_trig_identity_check(21, 0)
