"""Independent oracles for the hard-coded 100-digit reference constants.

Everything here is exact Fraction arithmetic: Machin's arctangent formula
for pi, integer square roots for the radicals, and the atanh series for
the logarithm.  None of it shares code with the library's numeric paths.
"""

from fractions import Fraction
from math import isqrt

import pytest

from wallislab.numkit import _REFERENCE_TABLE, reference_constant

ORACLE_EPS = Fraction(1, 10**99)


def _arctan_inverse(x: int, terms: int) -> Fraction:
    """atan(1/x) by the alternating series, exact."""
    total = Fraction(0)
    for k in range(terms):
        term = Fraction(1, (2 * k + 1) * x ** (2 * k + 1))
        total += -term if k % 2 else term
    return total


def machin_pi() -> Fraction:
    """pi = 16 atan(1/5) - 4 atan(1/239), good far beyond 100 digits."""
    return 16 * _arctan_inverse(5, 90) - 4 * _arctan_inverse(239, 30)


def fraction_sqrt(q: Fraction, scale_digits: int = 110) -> Fraction:
    """Floor square root of q at scale_digits decimal digits."""
    scaled = q.numerator * 10 ** (2 * scale_digits) // q.denominator
    return Fraction(isqrt(scaled), 10**scale_digits)


def log_pi_over_2_oracle(pi: Fraction) -> Fraction:
    """log(pi/2) = 2 atanh((pi - 2) / (pi + 2)), atanh by its series."""
    y = (pi - 2) / (pi + 2)
    total = Fraction(0)
    power = y
    y2 = y * y
    for k in range(85):
        total += power / (2 * k + 1)
        power *= y2
    return 2 * total


def _table_fraction(name: str) -> Fraction:
    return Fraction(_REFERENCE_TABLE[name])


def test_pi_table_matches_machin_oracle():
    assert abs(_table_fraction("pi") - machin_pi()) < ORACLE_EPS


def test_sqrt_pi_table_matches_integer_sqrt_oracle():
    assert abs(_table_fraction("sqrt_pi") - fraction_sqrt(machin_pi())) < ORACLE_EPS


def test_sqrt_2pi_table_matches_integer_sqrt_oracle():
    assert abs(_table_fraction("sqrt_2pi") - fraction_sqrt(2 * machin_pi())) < ORACLE_EPS


def test_log_pi_over_2_table_matches_atanh_oracle():
    oracle = log_pi_over_2_oracle(machin_pi())
    assert abs(_table_fraction("log_pi_over_2") - oracle) < ORACLE_EPS


@pytest.mark.parametrize(
    "name,expected",
    [
        ("pi", "3.141592654"),
        ("log_pi_over_2", "0.4515827053"),
        ("sqrt_pi", "1.772453851"),
    ],
)
def test_ten_digit_values(name, expected):
    assert reference_constant(name, 10).to_decimal_string() == expected
