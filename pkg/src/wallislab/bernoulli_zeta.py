"""Exact Bernoulli numbers and even zeta values by two independent routes:
direct summation of n^(-2k) and the Bernoulli closed form as an exact
rational multiple of pi^(2k).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple, Union

from mpmath import mp, mpf

from .numkit import (
    DEFAULT_DIGITS,
    BigRational,
    ErrorBoundedValue,
    MethodId,
    PrecisionReal,
    reference_constant,
)

MAX_BERNOULLI_INDEX = 500
MAX_CLOSED_FORM_K = 250
DIRECT_TERM_CAP = 10**8


class TermCapExceededError(ValueError):
    """Requested tolerance would need more summation terms than the cap."""


@dataclass(frozen=True)
class BernoulliTable:
    """Bernoulli numbers B_0 .. B_{k_max} as exact rationals.

    Convention B_1 = -1/2, fixed by the -t/2 linear term of the
    generating function t/(e^t - 1).
    """

    values: Tuple[BigRational, ...]

    @property
    def k_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, k: int) -> BigRational:
        return self.values[k]


# Growing cache of Bernoulli numbers; extended in place, read-only after.
_bernoulli_cache: list = [Fraction(1)]


def bernoulli_numbers(k_max: int) -> BernoulliTable:
    """Bernoulli numbers via the binomial-sum recursion.

    Each new B_m satisfies sum_{j=0}^{m} C(m+1, j) B_j = 0, which is the
    standard consequence of multiplying the generating function by
    (e^t - 1) and matching Taylor coefficients.

    Raises:
        ValueError: k_max negative or above the 500 cap.
    """
    if k_max < 0:
        raise ValueError(f"k_max must be nonnegative, got {k_max}")
    if k_max > MAX_BERNOULLI_INDEX:
        raise ValueError(f"k_max capped at {MAX_BERNOULLI_INDEX}, got {k_max}")
    while len(_bernoulli_cache) <= k_max:
        m = len(_bernoulli_cache)
        acc = sum(
            math.comb(m + 1, j) * _bernoulli_cache[j] for j in range(m)
        )
        _bernoulli_cache.append(Fraction(-acc, m + 1))
    return BernoulliTable(tuple(_bernoulli_cache[: k_max + 1]))


def zeta_even_coefficient(k: int) -> BigRational:
    """The exact rational q_k with zeta(2k) = q_k * pi^(2k).

    q_k = -(-4)^k B_{2k} / (2 * (2k)!); positive for every k >= 1.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    b2k = bernoulli_numbers(2 * k)[2 * k]
    return Fraction(-((-4) ** k)) * b2k / (2 * math.factorial(2 * k))


TolLike = Union[PrecisionReal, float]


def _tol_to_float(tol: TolLike) -> float:
    return float(tol)


def zeta_even_direct(
    k: int, tol: TolLike = 1e-12, digits: int = DEFAULT_DIGITS
) -> ErrorBoundedValue:
    """zeta(2k) by direct summation with an Euler-Maclaurin tail.

    A raw partial sum of n^(-2) would need ~10^12 terms for 1e-12, far
    past the term cap, so the tail beyond N is replaced by its integral
    plus the first two Euler-Maclaurin corrections; the reported error
    bound is the magnitude of the first omitted correction term,
    s(s+1)(s+2) N^(-s-3) / 720 with s = 2k.

    Raises:
        TermCapExceededError: The tolerance needs more than 10^8 terms.
        ValueError: k < 1 or tol <= 0.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    tol_f = _tol_to_float(tol)
    if not tol_f > 0:
        raise ValueError(f"tolerance must be positive, got {tol_f}")
    s = 2 * k
    lead = s * (s + 1) * (s + 2) / 720.0
    n_terms = max(10, math.ceil((lead / tol_f) ** (1.0 / (s + 3))))
    if n_terms > DIRECT_TERM_CAP:
        raise TermCapExceededError(
            f"tol={tol_f:g} needs {n_terms} terms, cap is {DIRECT_TERM_CAP}"
        )
    with mp.workdps(digits + 10):
        total = mp.fsum(mpf(n) ** (-s) for n in range(1, n_terms + 1))
        big_n = mpf(n_terms)
        total += big_n ** (1 - s) / (s - 1)
        total -= big_n ** (-s) / 2
        total += s * big_n ** (-s - 1) / 12
        bound = s * (s + 1) * (s + 2) * big_n ** (-s - 3) / 720
    estimate = PrecisionReal(PrecisionReal._round(total, digits), digits)
    return ErrorBoundedValue(
        estimate=estimate,
        abs_error_bound=PrecisionReal(PrecisionReal._round(bound, digits), digits),
        method=MethodId.ZETA_DIRECT,
        terms_used=n_terms,
    )


def zeta_even_closed_form(k: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """zeta(2k) as the exact rational coefficient times reference pi^(2k).

    The only inexactness is the final rounding to the working precision,
    so the error bound is one unit in the last reported digit.
    """
    if not 1 <= k <= MAX_CLOSED_FORM_K:
        raise ValueError(f"k must be in [1, {MAX_CLOSED_FORM_K}], got {k}")
    coeff = zeta_even_coefficient(k)
    pi = reference_constant("pi", digits)
    value = PrecisionReal.from_rational(coeff, digits) * pi ** (2 * k)
    with mp.workdps(digits + 10):
        bound = abs(value.value) * mpf(10) ** (1 - digits)
    return ErrorBoundedValue(
        estimate=value,
        abs_error_bound=PrecisionReal(PrecisionReal._round(bound, digits), digits),
        method=MethodId.ZETA_CLOSED_FORM,
        terms_used=1,
    )
