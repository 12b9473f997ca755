"""Convergence tables: per-method estimate sequences, error measurement
against the hard-coded reference constants, and deterministic CSV output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, List, Sequence, Tuple

import numpy as np
from mpmath import mp, mpf

from . import pi_series
from .numkit import (
    DEFAULT_DIGITS,
    ErrorBoundedValue,
    MethodId,
    format_significant,
    reference_constant,
)

CSV_HEADER = "index,partial_value,abs_error,digits_b10,digits_b4"

#: Which reference constant each method converges to.
METHOD_REFERENCES = {
    MethodId.WALLIS: ("pi", Fraction(1, 2)),  # pi/2
    MethodId.GREGORY_LEIBNIZ: ("pi", Fraction(1, 4)),  # pi/4
    MethodId.LOG_PI_ZETA: ("log_pi_over_2", Fraction(1)),
    MethodId.LOG_PI_BERNOULLI: ("log_pi_over_2", Fraction(1)),
    MethodId.STUDENT_T_LIMIT: ("pi", Fraction(1)),
    MethodId.BUFFON_MC: ("pi", Fraction(1)),
}

TABLE_METHODS = tuple(METHOD_REFERENCES)


@dataclass(frozen=True)
class ConvergenceRecord:
    """One convergence-table row; the decimal strings are already at the
    working precision, so writing them is a pure serialization step."""

    index: int
    partial_value: str
    abs_error: str
    digits_b10: int
    digits_b4: int


def method_reference(method: MethodId, digits: int = DEFAULT_DIGITS) -> mpf:
    """The limit the method converges to, from the reference table."""
    name, scale = METHOD_REFERENCES[method]
    base = reference_constant(name, digits)
    with mp.workdps(digits + 10):
        return +(base.value * scale.numerator / scale.denominator)


def _correct_digits(err: mpf, base: float, digits: int) -> int:
    if err == 0:
        # Indistinguishable from the reference at working precision.
        return max(0, math.floor(digits * math.log(10) / math.log(base)))
    if not mp.isfinite(err):
        return 0
    value = -mp.log(err) / math.log(base)
    return max(0, int(mp.floor(value)))


def _sequence(
    method: MethodId, max_terms: int, digits: int, seed: int
) -> List[Tuple[int, mpf]]:
    """(index, estimate) pairs for index = 1..max_terms."""
    if method is MethodId.WALLIS:
        return pi_series.wallis_sequence(max_terms, digits)
    if method is MethodId.GREGORY_LEIBNIZ:
        sums = pi_series.gregory_leibniz_partial_sums(max_terms - 1)
        return [(i + 1, mpf(s)) for i, s in enumerate(sums)]
    if method in (MethodId.LOG_PI_ZETA, MethodId.LOG_PI_BERNOULLI):
        term = (
            pi_series.log_pi_over_2_zeta_term
            if method is MethodId.LOG_PI_ZETA
            else pi_series.log_pi_over_2_bernoulli_term
        )
        out = []
        with mp.workdps(digits + 10):
            partial = mpf(0)
            for k in range(1, max_terms + 1):
                partial = +(partial + term(k, digits).value)
                out.append((k, partial))
        return out
    if method is MethodId.STUDENT_T_LIMIT:
        out = []
        with mp.workdps(digits + 10):
            c_squared = Fraction(1, 8)  # c_2^2
            for m in range(1, max_terms + 1):
                if m > 1:
                    c_squared *= Fraction(2 * m - 1, 2 * m) ** 2 * Fraction(m, m - 1)
                estimate = Fraction(1, 2) / c_squared
                out.append((m, mpf(estimate.numerator) / mpf(estimate.denominator)))
        return out
    if method is MethodId.BUFFON_MC:
        config = pi_series.BuffonConfig(1.0, 1.0, max_terms, seed)
        rng = np.random.default_rng(config.rng_seed)
        half_pi = float(reference_constant("pi", 20).value) / 2
        offsets = rng.uniform(0.0, config.line_gap / 2, config.throws)
        angles = rng.uniform(0.0, half_pi, config.throws)
        crossed = config.needle_length / 2 * np.sin(angles) >= offsets
        cumulative = np.cumsum(crossed)
        out = []
        for i in range(1, max_terms + 1):
            hits = int(cumulative[i - 1])
            estimate = mpf(2 * i) / hits if hits else mpf("inf")
            out.append((i, estimate))
        return out
    raise ValueError(f"method {method} has no convergence table")


def convergence_table(
    method: MethodId,
    max_terms: int,
    step: int = 1,
    digits: int = DEFAULT_DIGITS,
    seed: int = 42,
) -> List[ConvergenceRecord]:
    """Records at indices step, 2*step, ... up to max_terms.

    ``abs_error`` is measured against the method's reference constant at
    the working precision; the digit columns are floor(-log error) in
    base 10 and base 4, clamped at zero.
    """
    if max_terms < 1:
        raise ValueError(f"max_terms must be >= 1, got {max_terms}")
    if step < 1:
        raise ValueError(f"step must be >= 1, got {step}")
    reference = method_reference(method, digits)
    wanted = set(range(step, max_terms + 1, step))
    records = []
    with mp.workdps(digits + 10):
        for index, estimate in _sequence(method, max_terms, digits, seed):
            if index not in wanted:
                continue
            err = abs(estimate - reference)
            records.append(
                ConvergenceRecord(
                    index=index,
                    partial_value=format_significant(estimate, digits),
                    abs_error=format_significant(err, digits),
                    digits_b10=_correct_digits(err, 10.0, digits),
                    digits_b4=_correct_digits(err, 4.0, digits),
                )
            )
    return records


def write_csv(records: Sequence[ConvergenceRecord], stream: IO[str]) -> None:
    """UTF-8, LF line endings, no locale formatting; byte-stable per flags."""
    stream.write(CSV_HEADER + "\n")
    for r in records:
        stream.write(
            f"{r.index},{r.partial_value},{r.abs_error},{r.digits_b10},{r.digits_b4}\n"
        )


def compute_estimate(
    method: MethodId, terms: int, digits: int = DEFAULT_DIGITS, seed: int = 42
) -> ErrorBoundedValue:
    """Dispatch a single bounded estimate for the CLI ``compute`` verb."""
    if method is MethodId.WALLIS:
        return pi_series.wallis_estimate(terms, digits)
    if method is MethodId.GREGORY_LEIBNIZ:
        return pi_series.gregory_leibniz(terms, digits)
    if method is MethodId.LOG_PI_ZETA:
        return pi_series.log_pi_over_2_zeta(terms, digits)
    if method is MethodId.LOG_PI_BERNOULLI:
        return pi_series.log_pi_over_2_bernoulli(terms, digits)
    if method is MethodId.STUDENT_T_LIMIT:
        return pi_series.student_t_limit_estimate(terms, digits)
    if method is MethodId.BUFFON_MC:
        return pi_series.buffon_estimate(
            pi_series.BuffonConfig(1.0, 1.0, terms, seed), digits
        )
    raise ValueError(f"method {method} is not computable directly")
