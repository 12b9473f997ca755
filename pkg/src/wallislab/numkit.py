"""Arithmetic substrate: exact rationals, precision-parameterized reals,
and the hard-coded reference constants every convergence measurement is
judged against.

Exact quantities (Bernoulli numbers, double-factorial ratios, Wallis
partial products) live in ``BigRational``; every approximate quantity
flows through ``PrecisionReal``, which carries its own decimal-digit
precision.  Reference constants are transcribed 100-digit literals, never
computed in-process, so the series under test cannot contaminate their
own error baseline.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpf

# Exact rational backbone.  fractions.Fraction already guarantees the two
# invariants we need (positive denominator, gcd-reduced after every
# operation), so we use it directly rather than reimplementing big-rational
# arithmetic.
BigRational = Fraction

#: Default working precision in decimal digits.  All acceptance tolerances
#: sit at or above 1e-12, leaving ample guard digits.
DEFAULT_DIGITS = 50

#: Extra binary headroom used while executing a single arithmetic step so
#: the final round-to-nearest-even happens once, at the target precision.
_GUARD_DIGITS = 10


class MethodId(enum.Enum):
    """Estimators and derived quantities that can carry an error bound."""

    WALLIS = "wallis"
    GREGORY_LEIBNIZ = "gregory-leibniz"
    LOG_PI_ZETA = "log-pi-zeta"
    LOG_PI_BERNOULLI = "log-pi-bernoulli"
    STUDENT_T_LIMIT = "student-t-limit"
    BUFFON_MC = "buffon-mc"
    ZETA_DIRECT = "zeta-direct"
    ZETA_CLOSED_FORM = "zeta-closed-form"
    STUDENT_T_NORMALIZATION = "student-t-normalization"


def rational_add(a: BigRational, b: BigRational) -> BigRational:
    """Exact sum in canonical form."""
    return a + b


def rational_sub(a: BigRational, b: BigRational) -> BigRational:
    """Exact difference in canonical form."""
    return a - b


def rational_mul(a: BigRational, b: BigRational) -> BigRational:
    """Exact product in canonical form."""
    return a * b


def rational_div(a: BigRational, b: BigRational) -> BigRational:
    """Exact quotient in canonical form.

    Raises:
        ZeroDivisionError: If ``b`` is zero.
    """
    if b == 0:
        raise ZeroDivisionError("rational division by zero")
    return a / b


def _digits_to_prec(digits: int) -> int:
    """Decimal digits -> binary precision, with guard bits for one rounding."""
    return int((digits + 1) * 3.3219280948873626) + 4


@dataclass(frozen=True)
class PrecisionReal:
    """A real number carried at an explicit decimal-digit precision.

    Arithmetic between two values is performed (and rounded to nearest,
    ties to even) at the minimum of the two precisions.  Instances are
    immutable and safe for unrestricted concurrent use.
    """

    value: mpf
    digits: int

    def __post_init__(self) -> None:
        if self.digits < 1:
            raise ValueError(f"precision must be positive, got {self.digits}")

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, q: BigRational, digits: int = DEFAULT_DIGITS) -> "PrecisionReal":
        """Round an exact rational to ``digits`` decimal digits (nearest-even)."""
        with mp.workdps(digits + _GUARD_DIGITS):
            v = mpf(q.numerator) / mpf(q.denominator)
            return cls(cls._round(v, digits), digits)

    @classmethod
    def from_int(cls, n: int, digits: int = DEFAULT_DIGITS) -> "PrecisionReal":
        return cls.from_rational(Fraction(n), digits)

    @classmethod
    def from_float(cls, x: float, digits: int = DEFAULT_DIGITS) -> "PrecisionReal":
        """Wrap an IEEE double exactly, then round to ``digits`` digits."""
        with mp.workdps(digits + _GUARD_DIGITS):
            return cls(cls._round(mpf(x), digits), digits)

    @classmethod
    def from_str(cls, s: str, digits: int = DEFAULT_DIGITS) -> "PrecisionReal":
        with mp.workdps(digits + _GUARD_DIGITS):
            return cls(cls._round(mpf(s), digits), digits)

    @staticmethod
    def _round(v: mpf, digits: int) -> mpf:
        with mp.workprec(_digits_to_prec(digits)):
            return +v

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other) -> "PrecisionReal":
        if isinstance(other, PrecisionReal):
            return other
        if isinstance(other, int):
            return PrecisionReal.from_int(other, self.digits)
        if isinstance(other, Fraction):
            return PrecisionReal.from_rational(other, self.digits)
        return NotImplemented  # type: ignore[return-value]

    def _binop(self, other, op) -> "PrecisionReal":
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        digits = min(self.digits, rhs.digits)
        with mp.workprec(_digits_to_prec(digits)):
            return PrecisionReal(+op(self.value, rhs.value), digits)

    def __add__(self, other):
        return self._binop(other, lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        return self._binop(other, lambda a, b: a - b)

    def __rsub__(self, other):
        return self._binop(other, lambda a, b: b - a)

    def __mul__(self, other):
        return self._binop(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._binop(other, lambda a, b: a / b)

    def __rtruediv__(self, other):
        return self._binop(other, lambda a, b: b / a)

    def __neg__(self) -> "PrecisionReal":
        return PrecisionReal(-self.value, self.digits)

    def __abs__(self) -> "PrecisionReal":
        return PrecisionReal(abs(self.value), self.digits)

    def __pow__(self, exponent: int) -> "PrecisionReal":
        with mp.workprec(_digits_to_prec(self.digits)):
            return PrecisionReal(+(self.value ** exponent), self.digits)

    def sqrt(self) -> "PrecisionReal":
        with mp.workprec(_digits_to_prec(self.digits)):
            return PrecisionReal(+mp.sqrt(self.value), self.digits)

    # -- comparisons (numeric value only) ------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, PrecisionReal):
            return self.value == other.value
        if isinstance(other, (int, float)):
            return self.value == other
        return NotImplemented

    def __lt__(self, other) -> bool:
        other = other.value if isinstance(other, PrecisionReal) else other
        return self.value < other

    def __le__(self, other) -> bool:
        other = other.value if isinstance(other, PrecisionReal) else other
        return self.value <= other

    def __gt__(self, other) -> bool:
        other = other.value if isinstance(other, PrecisionReal) else other
        return self.value > other

    def __ge__(self, other) -> bool:
        other = other.value if isinstance(other, PrecisionReal) else other
        return self.value >= other

    def __hash__(self) -> int:
        return hash((self.value, self.digits))

    def __float__(self) -> float:
        return float(self.value)

    def to_decimal_string(self) -> str:
        """Exactly ``digits`` significant digits, deterministic formatting."""
        return format_significant(self.value, self.digits)

    def __str__(self) -> str:
        return self.to_decimal_string()


def format_significant(v: mpf, digits: int) -> str:
    """Format ``v`` with exactly ``digits`` significant digits.

    Locale-free, LF-friendly, stable across runs: the basis of the CLI's
    byte-identical output contract.
    """
    if v == 0:
        return "0." + "0" * (digits - 1)
    with mp.workdps(digits + _GUARD_DIGITS):
        return mp.nstr(v, digits, strip_zeros=False)


class UnknownConstantError(KeyError):
    """Requested reference constant is not in the hard-coded table."""


# 100 significant digits each, transcribed once and locked down by the
# independent Machin / integer-sqrt / atanh-series oracles in the test
# suite.  Never recomputed at runtime.
_REFERENCE_TABLE = {
    "pi": "3."
    "141592653589793238462643383279502884197169399375105820974944592307816406286208998628034825342117068",
    "sqrt_pi": "1."
    "772453850905516027298167483341145182797549456122387128213807789852911284591032181374950656738544665",
    "log_pi_over_2": "0."
    "4515827052894548647261952298948821435717946785550563173929430619787441479151313641777599432790710202",
    "sqrt_2pi": "2."
    "506628274631000502415765284811045253006986740609938316629923576342293654607841974946595838378057266",
}

REFERENCE_CONSTANT_NAMES = tuple(_REFERENCE_TABLE)
MAX_REFERENCE_DIGITS = 100


def reference_constant(name: str, digits: int = DEFAULT_DIGITS) -> PrecisionReal:
    """Return a named reference constant correct to ``digits`` digits.

    Args:
        name: One of ``pi``, ``sqrt_pi``, ``log_pi_over_2``, ``sqrt_2pi``.
        digits: Requested precision, at most 100.

    Raises:
        UnknownConstantError: Unrecognized ``name``.
        ValueError: ``digits`` outside [1, 100].
    """
    if name not in _REFERENCE_TABLE:
        raise UnknownConstantError(
            f"unknown constant {name!r}; expected one of {sorted(_REFERENCE_TABLE)}"
        )
    if not 1 <= digits <= MAX_REFERENCE_DIGITS:
        raise ValueError(f"digits must be in [1, {MAX_REFERENCE_DIGITS}], got {digits}")
    return PrecisionReal.from_str(_REFERENCE_TABLE[name], digits)


def double_factorial(n: int) -> int:
    """n!! = n(n-2)(n-4)...; empty products 0!! and (-1)!! are 1.

    The (-1)!! = 1 convention keeps the even-degrees-of-freedom
    normalization-constant product uniform at its first index.
    """
    if n < -1:
        raise ValueError(f"double factorial undefined for n={n}")
    result = 1
    while n > 1:
        result *= n
        n -= 2
    return result


@dataclass(frozen=True)
class ErrorBoundedValue:
    """An estimate plus a rigorous absolute error bound and its provenance.

    For alternating-series methods the bound is the magnitude of the first
    omitted term.
    """

    estimate: PrecisionReal
    abs_error_bound: PrecisionReal
    method: MethodId
    terms_used: int

    def __post_init__(self) -> None:
        if self.abs_error_bound.value < 0:
            raise ValueError("abs_error_bound must be nonnegative")
        if self.terms_used < 0:
            raise ValueError("terms_used must be nonnegative")


def factorial(n: int) -> int:
    return math.factorial(n)
