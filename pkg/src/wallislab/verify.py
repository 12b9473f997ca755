"""Cross-verification engine: every inter-module identity is a named,
reportable check, and suites bundle them per topic.

Tolerances live in one table so a check's acceptance threshold can be
audited in a single place.  A check whose threshold is finer than the
working precision reports ``skipped`` rather than a vacuous pass.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from mpmath import mp, mpf

from . import bernoulli_zeta, gammafn, pi_series, student_t
from .gammafn import HalfInteger
from .numkit import (
    DEFAULT_DIGITS,
    PrecisionReal,
    double_factorial,
    factorial,
    reference_constant,
)

PASS = "pass"
FAIL = "fail"
SKIPPED = "skipped"


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    status: str
    detail: str
    measured: Optional[PrecisionReal] = None
    bound: Optional[PrecisionReal] = None


@dataclass(frozen=True)
class SuiteReport:
    """Outcome of one suite run; counts always sum to len(results)."""

    suite: str
    results: Tuple[CheckResult, ...]
    duration_seconds: float

    @property
    def counts(self) -> Dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIPPED: 0}
        for r in self.results:
            out[r.status] += 1
        return out

    @property
    def failed(self) -> bool:
        return self.counts[FAIL] > 0

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {len(self.results)} checks"]
        for r in self.results:
            lines.append(f"  [{r.status.upper():7s}] {r.check_id}: {r.detail}")
        c = self.counts
        lines.append(
            f"{c[PASS]} passed, {c[FAIL]} failed, {c[SKIPPED]} skipped "
            f"in {self.duration_seconds:.2f}s"
        )
        return "\n".join(lines)

    def to_tsv(self) -> str:
        lines = []
        for r in self.results:
            measured = r.measured.to_decimal_string() if r.measured is not None else ""
            bound = r.bound.to_decimal_string() if r.bound is not None else ""
            lines.append(f"{r.check_id}\t{r.status}\t{measured}\t{bound}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class SuiteParams:
    """Ranges each check sweeps; defaults mirror the acceptance gates."""

    digits: int = DEFAULT_DIGITS
    gamma_recursion_max_twice: int = 200
    gamma_numeric_max: int = 50
    cosine_moment_max: int = 400
    lemma_max: int = 200
    beta_trig_pairs: Tuple[Tuple[int, int], ...] = ((0, 0), (1, 0), (2, 3), (5, 7), (10, 4))
    zeta_direct_max_k: int = 10
    zeta_bound_max_k: int = 20
    bernoulli_odd_max: int = 100
    student_norm_max: int = 100
    student_limit_max: int = 1000
    student_bridge_max: int = 400
    wallis_identity_max: int = 200
    wallis_monotone_max: int = 10_000
    logpi_digit_rate_max: int = 40
    logpi_dual_max: int = 40


#: check_id -> (absolute tolerance or None for exact checks,
#:              minimum working digits needed to make the check meaningful)
CHECK_TOLERANCES: Dict[str, Tuple[Optional[float], int]] = {
    "gamma_recursion": (None, 1),
    "gamma_numeric_vs_exact": (1e-12, 14),
    "cosine_moment_closed_form": (None, 1),
    "lemma_exact": (None, 1),
    "beta_trig_identity": (1e-10, 12),
    "zeta_coefficients_exact": (None, 1),
    "zeta_direct_vs_closed": (2e-12, 14),
    "zeta_bounded_decreasing": (None, 14),
    "bernoulli_odd_vanish": (None, 1),
    "student_normalization": (1e-10, 14),
    "student_c_limit": (None, 14),
    "student_exact_bridge": (1e-40, 45),
    "wallis_identity": (None, 1),
    "wallis_monotone": (None, 14),
    "logpi_digit_rate": (None, 40),
    "logpi_dual_form": (1e-40, 45),
}


def _skip(check_id: str, digits: int) -> Optional[CheckResult]:
    _, required = CHECK_TOLERANCES[check_id]
    if digits < required:
        return CheckResult(
            check_id,
            SKIPPED,
            f"needs >= {required} working digits, have {digits}",
        )
    return None


def _outcome(check_id: str, ok: bool, detail: str, measured=None, bound=None) -> CheckResult:
    return CheckResult(check_id, PASS if ok else FAIL, detail, measured, bound)


def _pr(value, digits: int) -> PrecisionReal:
    return PrecisionReal(PrecisionReal._round(mpf(value), digits), digits)


# -- individual checks ------------------------------------------------


def check_gamma_recursion(p: SuiteParams) -> CheckResult:
    cid = "gamma_recursion"
    for twice in range(1, p.gamma_recursion_max_twice + 1):
        x = HalfInteger(twice)
        left = gammafn.gamma_half_integer(x + 1)
        right = gammafn.gamma_half_integer(x)
        expected = (x.as_fraction * right.rational_part, right.sqrt_pi_power)
        if (left.rational_part, left.sqrt_pi_power) != expected:
            return _outcome(cid, False, f"recursion broken at x = {twice}/2")
    return _outcome(
        cid, True, f"Gamma(x+1) = x Gamma(x) exact for 2x <= {p.gamma_recursion_max_twice}"
    )


def check_gamma_numeric(p: SuiteParams) -> CheckResult:
    cid = "gamma_numeric_vs_exact"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    worst = mpf(0)
    with mp.workdps(p.digits + 10):
        for twice in range(1, 2 * p.gamma_numeric_max + 1):
            exact = gammafn.gamma_half_integer(HalfInteger(twice)).to_precision_real(
                p.digits
            )
            approx = gammafn.gamma_numeric(Fraction(twice, 2), p.digits)
            rel = abs(approx.value - exact.value) / exact.value
            worst = max(worst, rel)
    ok = worst <= tol
    return _outcome(
        cid,
        ok,
        f"max relative error {mp.nstr(worst, 3)} vs tolerance {tol:g} "
        f"at half-integers <= {p.gamma_numeric_max}",
        measured=_pr(worst, p.digits),
        bound=_pr(tol, p.digits),
    )


def check_cosine_moment(p: SuiteParams) -> CheckResult:
    cid = "cosine_moment_closed_form"
    for n in range(p.cosine_moment_max + 1):
        moment = gammafn.cosine_moment_recursive(n)
        ratio = Fraction(double_factorial(n - 1), double_factorial(n))
        expected = (ratio / 2, 1) if n % 2 == 0 else (ratio, 0)
        if (moment.rational_part, moment.pi_power) != expected:
            return _outcome(cid, False, f"closed form mismatch at n = {n}")
    return _outcome(cid, True, f"closed form exact for n <= {p.cosine_moment_max}")


def check_lemma(p: SuiteParams) -> CheckResult:
    cid = "lemma_exact"
    for nu in range(1, p.lemma_max + 1):
        if not gammafn.lemma_check(nu):
            return _outcome(cid, False, f"lemma fails at nu = {nu}")
    return _outcome(cid, True, f"moment/Gamma lemma exact for nu <= {p.lemma_max}")


def check_beta_trig(p: SuiteParams) -> CheckResult:
    cid = "beta_trig_identity"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    for m, n in p.beta_trig_pairs:
        if not gammafn.beta_trig_identity_check(m, n, tol=tol):
            return _outcome(cid, False, f"Beta vs quadrature mismatch at (m, n) = ({m}, {n})")
    return _outcome(
        cid,
        True,
        f"Beta trig identity holds to {tol:g} on {len(p.beta_trig_pairs)} pairs",
        bound=_pr(tol, p.digits),
    )


def check_zeta_coefficients(p: SuiteParams) -> CheckResult:
    cid = "zeta_coefficients_exact"
    expected = {1: Fraction(1, 6), 2: Fraction(1, 90), 3: Fraction(1, 945)}
    for k, want in expected.items():
        got = bernoulli_zeta.zeta_even_coefficient(k)
        if got != want:
            return _outcome(cid, False, f"coefficient at k={k}: got {got}, want {want}")
    return _outcome(cid, True, "zeta(2)/pi^2 = 1/6, zeta(4)/pi^4 = 1/90, zeta(6)/pi^6 = 1/945")


def check_zeta_direct_vs_closed(p: SuiteParams) -> CheckResult:
    cid = "zeta_direct_vs_closed"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    worst = mpf(0)
    with mp.workdps(p.digits + 10):
        for k in range(1, p.zeta_direct_max_k + 1):
            direct = bernoulli_zeta.zeta_even_direct(k, 1e-12, p.digits)
            closed = bernoulli_zeta.zeta_even_closed_form(k, p.digits)
            worst = max(worst, abs(direct.estimate.value - closed.estimate.value))
    ok = worst <= tol
    return _outcome(
        cid,
        ok,
        f"max |direct - closed form| = {mp.nstr(worst, 3)} for k <= {p.zeta_direct_max_k}",
        measured=_pr(worst, p.digits),
        bound=_pr(tol, p.digits),
    )


def check_zeta_bounds(p: SuiteParams) -> CheckResult:
    cid = "zeta_bounded_decreasing"
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    previous = None
    for k in range(1, p.zeta_bound_max_k + 1):
        value = bernoulli_zeta.zeta_even_closed_form(k, p.digits).estimate.value
        if not (1 < value <= 2):
            return _outcome(cid, False, f"zeta(2k) = {mp.nstr(value, 12)} outside (1, 2] at k={k}")
        if previous is not None and not value < previous:
            return _outcome(cid, False, f"zeta(2k) not decreasing at k={k}")
        previous = value
    return _outcome(
        cid, True, f"1 < zeta(2k) <= 2 and strictly decreasing for k <= {p.zeta_bound_max_k}"
    )


def check_bernoulli_odd(p: SuiteParams) -> CheckResult:
    cid = "bernoulli_odd_vanish"
    table = bernoulli_zeta.bernoulli_numbers(p.bernoulli_odd_max)
    bad = [k for k in range(3, p.bernoulli_odd_max + 1, 2) if table[k] != 0]
    if bad:
        return _outcome(cid, False, f"nonzero odd Bernoulli numbers at {bad}")
    return _outcome(cid, True, f"B_k = 0 for odd k in [3, {p.bernoulli_odd_max}]")


def check_student_normalization(p: SuiteParams) -> CheckResult:
    cid = "student_normalization"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    worst = mpf(0)
    with mp.workdps(p.digits + 10):
        for nu in range(1, p.student_norm_max + 1):
            mass = student_t.integrate_density(nu, 1e-12, p.digits)
            worst = max(worst, abs(mass.estimate.value - 1))
    ok = worst <= tol
    return _outcome(
        cid,
        ok,
        f"max |mass - 1| = {mp.nstr(worst, 3)} for nu <= {p.student_norm_max}",
        measured=_pr(worst, p.digits),
        bound=_pr(tol, p.digits),
    )


def check_student_c_limit(p: SuiteParams) -> CheckResult:
    cid = "student_c_limit"
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    sqrt_2pi = reference_constant("sqrt_2pi", p.digits)
    previous = None
    worst_margin = mpf("inf")
    with mp.workdps(p.digits + 10):
        for nu in range(2, p.student_limit_max + 1):
            scaled = (
                student_t.normalization_constant(nu, p.digits).numeric.value
                * sqrt_2pi.value
            )
            if previous is not None and not scaled > previous:
                return _outcome(cid, False, f"c_nu * sqrt(2 pi) not increasing at nu={nu}")
            if nu >= 10:
                gap = abs(scaled - 1)
                allowed = mpf(1) / (2 * nu)
                worst_margin = min(worst_margin, allowed - gap)
                if gap > allowed:
                    return _outcome(
                        cid,
                        False,
                        f"|c_nu sqrt(2 pi) - 1| = {mp.nstr(gap, 6)} exceeds "
                        f"1/(2 nu) = {mp.nstr(allowed, 6)} at nu={nu}",
                    )
            previous = scaled
    return _outcome(
        cid,
        True,
        f"scaled constant increases to 1 within 1/(2 nu) for 10 <= nu <= {p.student_limit_max}",
        measured=_pr(worst_margin, p.digits),
    )


def check_student_bridge(p: SuiteParams) -> CheckResult:
    cid = "student_exact_bridge"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    worst = mpf(0)
    with mp.workdps(p.digits + 10):
        for nu in range(2, p.student_bridge_max + 1, 2):
            m = nu // 2
            nc = student_t.normalization_constant(nu, p.digits)
            assert nc.exact_squared is not None
            # Gamma-ratio form of the same square.
            gamma_form = Fraction(
                double_factorial(2 * m - 1) ** 2,
                2 * m * factorial(m - 1) ** 2 * 4**m,
            )
            if nc.exact_squared != gamma_form:
                return _outcome(cid, False, f"exact c^2 forms disagree at nu={nu}")
            exact = mpf(nc.exact_squared.numerator) / mpf(nc.exact_squared.denominator)
            worst = max(worst, abs(nc.numeric.value**2 - exact))
    ok = worst <= tol
    return _outcome(
        cid,
        ok,
        f"numeric^2 vs exact c^2 gap {mp.nstr(worst, 3)} for even nu <= {p.student_bridge_max}",
        measured=_pr(worst, p.digits),
        bound=_pr(tol, p.digits),
    )


def check_wallis_identity(p: SuiteParams) -> CheckResult:
    cid = "wallis_identity"
    for m in range(1, p.wallis_identity_max + 1):
        if not pi_series.wallis_identity_check(m):
            return _outcome(cid, False, f"identity fails at m={m}")
    return _outcome(
        cid, True, f"wallis_identity m=1..{p.wallis_identity_max} exact"
    )


def check_wallis_monotone(p: SuiteParams) -> CheckResult:
    cid = "wallis_monotone"
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    half_pi = reference_constant("pi", p.digits).value / 2
    previous = mpf(0)
    for m, value in pi_series.wallis_sequence(p.wallis_monotone_max, p.digits):
        if not previous < value < half_pi:
            return _outcome(
                cid, False, f"bracketing violated at m={m}: {mp.nstr(value, 20)}"
            )
        previous = value
    return _outcome(
        cid,
        True,
        f"partial products strictly increase and stay below pi/2 for m <= {p.wallis_monotone_max}",
    )


def check_logpi_digit_rate(p: SuiteParams) -> CheckResult:
    cid = "logpi_digit_rate"
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    reference = reference_constant("log_pi_over_2", p.digits)
    with mp.workdps(p.digits + 10):
        partial = pi_series.log_pi_over_2_zeta_term(1, p.digits).value
        errors = {}
        for k in range(2, p.logpi_digit_rate_max + 2):
            partial += pi_series.log_pi_over_2_zeta_term(k, p.digits).value
            errors[k] = abs(partial - reference.value)
        for k in range(2, p.logpi_digit_rate_max + 1):
            if not errors[k + 1] <= errors[k] / 4:
                return _outcome(
                    cid,
                    False,
                    f"error shrank only {mp.nstr(errors[k + 1] / errors[k], 4)}x at K={k}",
                )
    return _outcome(
        cid,
        True,
        f"each summand gains a base-4 digit for 2 <= K <= {p.logpi_digit_rate_max}",
    )


def check_logpi_dual_form(p: SuiteParams) -> CheckResult:
    cid = "logpi_dual_form"
    tol, _ = CHECK_TOLERANCES[cid]
    skip = _skip(cid, p.digits)
    if skip:
        return skip
    worst = mpf(0)
    with mp.workdps(p.digits + 10):
        for k in range(1, p.logpi_dual_max + 1):
            za = pi_series.log_pi_over_2_zeta_term(k, p.digits).value
            zb = pi_series.log_pi_over_2_bernoulli_term(k, p.digits).value
            worst = max(worst, abs(za - zb))
    ok = worst <= tol
    return _outcome(
        cid,
        ok,
        f"max term gap between the two forms is {mp.nstr(worst, 3)} for k <= {p.logpi_dual_max}",
        measured=_pr(worst, p.digits),
        bound=_pr(tol, p.digits),
    )


_GAMMA_CHECKS = [
    check_gamma_recursion,
    check_gamma_numeric,
    check_cosine_moment,
    check_lemma,
    check_beta_trig,
]
_ZETA_CHECKS = [
    check_zeta_coefficients,
    check_zeta_direct_vs_closed,
    check_zeta_bounds,
    check_bernoulli_odd,
]
_STUDENT_CHECKS = [
    check_student_normalization,
    check_student_c_limit,
    check_student_bridge,
]
_WALLIS_CHECKS = [check_wallis_identity, check_wallis_monotone]
_LOGPI_CHECKS = [check_logpi_digit_rate, check_logpi_dual_form]

SUITES: Dict[str, List[Callable[[SuiteParams], CheckResult]]] = {
    "gamma": _GAMMA_CHECKS,
    "zeta": _ZETA_CHECKS,
    "student": _STUDENT_CHECKS,
    "wallis": _WALLIS_CHECKS,
    "logpi": _LOGPI_CHECKS,
    "all": _GAMMA_CHECKS + _ZETA_CHECKS + _STUDENT_CHECKS + _WALLIS_CHECKS + _LOGPI_CHECKS,
}

SUITE_NAMES = tuple(SUITES)


class UnknownSuiteError(KeyError):
    pass


def run_suite(name: str, params: Optional[SuiteParams] = None) -> SuiteReport:
    """Run one named check suite and assemble its report.

    Results are ordered by check_id so reruns with identical parameters
    produce identical reports (up to the duration field).

    Raises:
        UnknownSuiteError: Unrecognized suite name.
    """
    if name not in SUITES:
        raise UnknownSuiteError(
            f"unknown suite {name!r}; expected one of {sorted(SUITES)}"
        )
    params = params or SuiteParams()
    start = time.perf_counter()
    results = sorted((fn(params) for fn in SUITES[name]), key=lambda r: r.check_id)
    return SuiteReport(
        suite=name,
        results=tuple(results),
        duration_seconds=time.perf_counter() - start,
    )
