"""Every pi-producing and log(pi/2)-producing procedure: Wallis partial
products (exact and numeric), the Gregory-Leibniz series, the log(pi/2)
series in its zeta and Bernoulli forms, and the Buffon's-needle Monte
Carlo estimator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

import numpy as np
from mpmath import mp, mpf

from .bernoulli_zeta import MAX_CLOSED_FORM_K, bernoulli_numbers, zeta_even_coefficient
from .numkit import (
    DEFAULT_DIGITS,
    BigRational,
    ErrorBoundedValue,
    MethodId,
    PrecisionReal,
    double_factorial,
    reference_constant,
)
from .student_t import normalization_constant


@dataclass(frozen=True)
class WallisPartial:
    """Partial product of the first m Wallis factors; always below pi/2."""

    m: int
    exact: BigRational
    numeric: PrecisionReal


def wallis_partial(m: int, digits: int = DEFAULT_DIGITS) -> WallisPartial:
    """Product over n = 1..m of (2n * 2n) / ((2n-1)(2n+1)).

    The numerator telescopes to 4^m * (m!)^2 and the denominator to
    (2m-1)!! * (2m+1)!!, so the exact value needs a single rational
    reduction rather than m of them.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    numerator = 4**m * math.factorial(m) ** 2
    denominator = double_factorial(2 * m - 1) * double_factorial(2 * m + 1)
    exact = Fraction(numerator, denominator)
    return WallisPartial(m, exact, PrecisionReal.from_rational(exact, digits))


def wallis_sequence(m_max: int, digits: int = DEFAULT_DIGITS) -> List[Tuple[int, mpf]]:
    """All numeric partial products up to m_max, without exact reduction.

    Used for long convergence tables and monotonicity sweeps where the
    exact rational would grow to tens of thousands of digits.
    """
    if m_max < 1:
        raise ValueError(f"m_max must be >= 1, got {m_max}")
    out: List[Tuple[int, mpf]] = []
    with mp.workdps(digits + 10):
        product = mpf(1)
        for n in range(1, m_max + 1):
            product = product * (4 * n * n) / (4 * n * n - 1)
            out.append((n, +product))
    return out


def wallis_estimate(m: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """Wallis partial product as a bounded estimate of pi/2.

    The missing factors satisfy log(pi/2 / P_m) = -sum_{n>m} log(1 - 1/(4n^2))
    <= sum_{n>m} 1/(4n^2 - 1) = 1/(2(2m+1)) by telescoping, so
    0 <= pi/2 - P_m <= P_m * (exp(1/(2(2m+1))) - 1).
    """
    partial = wallis_partial(m, digits)
    with mp.workdps(digits + 10):
        bound = partial.numeric.value * mp.expm1(mpf(1) / (2 * (2 * m + 1)))
    return ErrorBoundedValue(
        estimate=partial.numeric,
        abs_error_bound=PrecisionReal(PrecisionReal._round(bound, digits), digits),
        method=MethodId.WALLIS,
        terms_used=m,
    )


def wallis_identity_check(m: int) -> bool:
    """Exact rational identity P_m = m / ((4m+2) * c_{2m}^2).

    The left side is the Wallis partial product; the right side rebuilds
    it from the even-degrees-of-freedom normalization constant.  Equality
    is exact, zero tolerance.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    c_squared = normalization_constant(2 * m).exact_squared
    assert c_squared is not None
    return wallis_partial(m).exact == Fraction(m, 4 * m + 2) / c_squared


def gregory_leibniz(n_terms: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """Alternating partial sum through n = n_terms estimating pi/4.

    The error bound is the first omitted term, 1/(2*n_terms + 3).  The sum
    itself is accumulated with compensated IEEE-double summation; its
    rounding error (~1e-16) is negligible against the series truncation
    bound, which never drops below 5e-8 at any feasible term count.
    """
    if n_terms < 0:
        raise ValueError(f"n_terms must be nonnegative, got {n_terms}")
    total = math.fsum(
        (1.0 if n % 2 == 0 else -1.0) / (2 * n + 1) for n in range(n_terms + 1)
    )
    est_digits = min(digits, 15)
    return ErrorBoundedValue(
        estimate=PrecisionReal.from_float(total, est_digits),
        abs_error_bound=PrecisionReal.from_rational(
            Fraction(1, 2 * n_terms + 3), est_digits
        ),
        method=MethodId.GREGORY_LEIBNIZ,
        terms_used=n_terms + 1,
    )


def gregory_leibniz_partial_sums(n_max: int) -> np.ndarray:
    """Partial sums S_0 .. S_{n_max} as IEEE doubles, for bracketing sweeps."""
    n = np.arange(n_max + 1)
    terms = np.where(n % 2 == 0, 1.0, -1.0) / (2 * n + 1)
    return np.cumsum(terms)


def _log_pi_tail_bound(k_terms: int) -> Fraction:
    # Geometric tail with the uniform |zeta(2k)| <= 2 bound.
    return Fraction(2, k_terms) * Fraction(1, 4**k_terms) * Fraction(4, 3)


def log_pi_over_2_zeta_term(k: int, digits: int = DEFAULT_DIGITS) -> PrecisionReal:
    """The k-th summand zeta(2k) / (4^k * k), via the exact closed form."""
    coeff = zeta_even_coefficient(k) / (4**k * k)
    pi = reference_constant("pi", digits)
    return PrecisionReal.from_rational(coeff, digits) * pi ** (2 * k)


def log_pi_over_2_bernoulli_term(k: int, digits: int = DEFAULT_DIGITS) -> PrecisionReal:
    """The k-th summand -(-1)^k B_{2k} / (2k * (2k)!) * pi^(2k)."""
    b2k = bernoulli_numbers(2 * k)[2 * k]
    coeff = Fraction(-((-1) ** k)) * b2k / (2 * k * math.factorial(2 * k))
    pi = reference_constant("pi", digits)
    return PrecisionReal.from_rational(coeff, digits) * pi ** (2 * k)


def _log_pi_sum(term_fn, k_terms: int, digits: int, method: MethodId) -> ErrorBoundedValue:
    if not 1 <= k_terms <= MAX_CLOSED_FORM_K:
        raise ValueError(f"k_terms must be in [1, {MAX_CLOSED_FORM_K}], got {k_terms}")
    total = term_fn(1, digits)
    for k in range(2, k_terms + 1):
        total = total + term_fn(k, digits)
    return ErrorBoundedValue(
        estimate=total,
        abs_error_bound=PrecisionReal.from_rational(_log_pi_tail_bound(k_terms), digits),
        method=method,
        terms_used=k_terms,
    )


def log_pi_over_2_zeta(k_terms: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """Partial sum of log(pi/2) = sum_k zeta(2k) / (4^k * k).

    Gains at least one base-4 digit per extra summand; the error bound is
    the geometric tail with the uniform bound 2 on each zeta value.
    """
    return _log_pi_sum(log_pi_over_2_zeta_term, k_terms, digits, MethodId.LOG_PI_ZETA)


def log_pi_over_2_bernoulli(k_terms: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """Same series with summands written via Bernoulli numbers directly.

    Term by term equal to the zeta form; computed through the Bernoulli
    table so the two routes stay independent down to the coefficients.
    """
    return _log_pi_sum(
        log_pi_over_2_bernoulli_term, k_terms, digits, MethodId.LOG_PI_BERNOULLI
    )


class ZeroCrossingsError(RuntimeError):
    """No needle crossed a line; the estimator needs more throws."""


@dataclass(frozen=True)
class BuffonConfig:
    """Needle-throwing experiment parameters; requires length <= gap."""

    needle_length: float
    line_gap: float
    throws: int
    rng_seed: int = 42

    def __post_init__(self) -> None:
        if self.needle_length <= 0 or self.line_gap <= 0:
            raise ValueError("needle length and line gap must be positive")
        if self.needle_length > self.line_gap:
            raise ValueError(
                f"needle length {self.needle_length} must not exceed the line "
                f"gap {self.line_gap}"
            )
        if self.throws < 1:
            raise ValueError(f"throws must be >= 1, got {self.throws}")


def buffon_crossings(config: BuffonConfig) -> int:
    """Simulate the throws and count line crossings.

    RNG is numpy's PCG64 seeded with ``rng_seed``; the draw order (all
    center offsets, then all angles) is part of the determinism contract.
    A needle crosses when half its projected length covers the center's
    distance to the nearest line.
    """
    rng = np.random.default_rng(config.rng_seed)
    half_pi = float(reference_constant("pi", 20).value) / 2
    offsets = rng.uniform(0.0, config.line_gap / 2, config.throws)
    angles = rng.uniform(0.0, half_pi, config.throws)
    return int(np.count_nonzero(config.needle_length / 2 * np.sin(angles) >= offsets))


def buffon_estimate(config: BuffonConfig, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """Monte Carlo pi estimate from the crossing frequency.

    The crossing probability is 2*length / (pi * gap), so
    pi_hat = 2 * length * throws / (gap * crossings).  The 3-sigma bound
    propagates the binomial standard error of the crossing frequency
    through the reciprocal.

    Raises:
        ZeroCrossingsError: No crossing occurred.
    """
    crossings = buffon_crossings(config)
    if crossings == 0:
        raise ZeroCrossingsError(
            f"no crossings in {config.throws} throws; increase the throw count"
        )
    n = config.throws
    p_hat = crossings / n
    ratio = 2 * config.needle_length / config.line_gap
    pi_hat = ratio / p_hat
    se_p = math.sqrt(p_hat * (1 - p_hat) / n)
    bound = 3 * ratio / p_hat**2 * se_p
    est_digits = min(digits, 15)
    return ErrorBoundedValue(
        estimate=PrecisionReal.from_float(pi_hat, est_digits),
        abs_error_bound=PrecisionReal.from_float(bound, est_digits),
        method=MethodId.BUFFON_MC,
        terms_used=crossings,
    )


def student_t_limit_estimate(m: int, digits: int = DEFAULT_DIGITS) -> ErrorBoundedValue:
    """pi estimate 1 / (2 * c_{2m}^2) from the normalization-constant limit.

    Since 1/c_{2m}^2 = ((4m+2)/m) * P_m with P_m the Wallis partial
    product below pi/2, the estimate decreases to pi from above and
    pi_hat - pi < pi/(2m) <= pi_hat/(2m), which serves as the bound.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    c_squared = normalization_constant(2 * m, digits).exact_squared
    assert c_squared is not None
    estimate = PrecisionReal.from_rational(Fraction(1, 2) / c_squared, digits)
    bound = estimate / (2 * m)
    return ErrorBoundedValue(
        estimate=estimate,
        abs_error_bound=bound,
        method=MethodId.STUDENT_T_LIMIT,
        terms_used=m,
    )
