"""Student-t density, its normalization constant in exact and numeric
form, quadrature verification that the density integrates to 1, and the
study of how the constant approaches 1/sqrt(2*pi).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Union

import numpy as np
from mpmath import mp, mpf

from .gammafn import HalfInteger, gamma_half_integer
from .numkit import (
    DEFAULT_DIGITS,
    BigRational,
    ErrorBoundedValue,
    MethodId,
    PrecisionReal,
    double_factorial,
    reference_constant,
)
from .quadrature import integrate


@dataclass(frozen=True)
class StudentTParams:
    """Degrees of freedom for the t-distribution."""

    nu: int

    def __post_init__(self) -> None:
        if self.nu < 1:
            raise ValueError(f"degrees of freedom must be >= 1, got {self.nu}")


@dataclass(frozen=True)
class NormalizationConstant:
    """The prefactor that makes the t-density integrate to 1.

    ``exact_squared`` is populated only for even degrees of freedom
    nu = 2m, where the square of the constant is the rational
    ((2m-1)!!/(2m)!!)^2 * m/2.
    """

    nu: int
    numeric: PrecisionReal
    exact_squared: Optional[BigRational] = None

    def __post_init__(self) -> None:
        if self.numeric.value <= 0:
            raise ValueError("normalization constant must be positive")


def normalization_constant(nu: int, digits: int = DEFAULT_DIGITS) -> NormalizationConstant:
    """c for ``nu`` degrees of freedom.

    The numeric value is evaluated from the exact symbolic Gamma ratio
    Gamma((nu+1)/2) / (sqrt(pi*nu) * Gamma(nu/2)), so it is correct to
    the working precision for every nu.
    """
    params = StudentTParams(nu)
    g_num = gamma_half_integer(HalfInteger(nu + 1))  # Gamma((nu+1)/2)
    g_den = gamma_half_integer(HalfInteger(nu))  # Gamma(nu/2)
    # c^2 = ratio^2 * pi^(a-b) / (pi * nu), everything rational except pi.
    ratio = g_num.rational_part / g_den.rational_part
    pi_exp = g_num.sqrt_pi_power - g_den.sqrt_pi_power - 1  # in {-2, 0}
    c_squared = Fraction(ratio**2, params.nu)
    with mp.workdps(digits + 10):
        value = mpf(c_squared.numerator) / mpf(c_squared.denominator)
        if pi_exp:
            pi = mpf(reference_constant("pi", min(digits + 5, 100)).value)
            value *= pi**pi_exp
        numeric = mp.sqrt(value)
    exact_squared = None
    if nu % 2 == 0:
        m = nu // 2
        exact_squared = (
            Fraction(double_factorial(2 * m - 1), double_factorial(2 * m)) ** 2
            * Fraction(m, 2)
        )
        assert pi_exp == 0 and c_squared == exact_squared
    return NormalizationConstant(
        nu=nu,
        numeric=PrecisionReal(PrecisionReal._round(numeric, digits), digits),
        exact_squared=exact_squared,
    )


RealLike = Union[PrecisionReal, float, int, Fraction]


def _to_mpf(t: RealLike) -> mpf:
    if isinstance(t, PrecisionReal):
        return t.value
    if isinstance(t, Fraction):
        return mpf(t.numerator) / mpf(t.denominator)
    return mpf(t)


def t_density(params: StudentTParams, t: RealLike, digits: int = DEFAULT_DIGITS) -> PrecisionReal:
    """Density c * (1 + t^2/nu)^(-(nu+1)/2); positive and even in t."""
    c = normalization_constant(params.nu, digits).numeric
    with mp.workdps(digits + 10):
        tv = _to_mpf(t)
        kernel = mp.power(1 + tv * tv / params.nu, -mpf(params.nu + 1) / 2)
        value = c.value * kernel
    return PrecisionReal(PrecisionReal._round(value, digits), digits)


def normal_density(t: RealLike, digits: int = DEFAULT_DIGITS) -> PrecisionReal:
    """Standard normal density exp(-t^2/2) / sqrt(2*pi)."""
    inv_norm = reference_constant("sqrt_2pi", digits)
    with mp.workdps(digits + 10):
        tv = _to_mpf(t)
        value = mp.exp(-tv * tv / 2) / inv_norm.value
    return PrecisionReal(PrecisionReal._round(value, digits), digits)


def integrate_density(
    nu: int, tol: float = 1e-12, digits: int = DEFAULT_DIGITS
) -> ErrorBoundedValue:
    """Total mass of the t-density via the tangent substitution.

    t = sqrt(nu) * tan(theta) maps the whole real line to [0, pi/2) and
    turns the integral into c * 2*sqrt(nu) * integral of cos^(nu-1), which
    is evaluated by Gauss-Legendre quadrature; even the fat-tailed nu = 1
    case becomes a bounded smooth integral.  The result should be within
    ``tol`` of 1.
    """
    StudentTParams(nu)
    if not 1e-14 <= tol:
        raise ValueError(f"tol must be >= 1e-14, got {tol}")
    power = nu - 1

    def integrand(theta: np.ndarray) -> np.ndarray:
        return np.cos(theta) ** power

    moment, diff = integrate(integrand, 0.0, math.pi / 2, tol=tol)
    c = normalization_constant(nu, digits).numeric
    with mp.workdps(digits + 10):
        total = c.value * 2 * mp.sqrt(nu) * mpf(moment)
        bound = 2 * mp.sqrt(nu) * c.value * (mpf(diff) + mpf(tol))
    return ErrorBoundedValue(
        estimate=PrecisionReal(PrecisionReal._round(total, digits), digits),
        abs_error_bound=PrecisionReal(PrecisionReal._round(bound, digits), digits),
        method=MethodId.STUDENT_T_NORMALIZATION,
        terms_used=nu,
    )


@dataclass(frozen=True)
class LimitStudyRow:
    """One degrees-of-freedom step of the approach to the normal density."""

    nu: int
    c_scaled: PrecisionReal  # c_nu * sqrt(2*pi); tends to 1 from below
    sup_distance: float  # max |f_nu(t) - phi(t)| over the [-8, 8] grid


GRID_LO, GRID_HI, GRID_STEP = -8.0, 8.0, 0.1


def _grid() -> np.ndarray:
    n = int(round((GRID_HI - GRID_LO) / GRID_STEP))
    return GRID_LO + GRID_STEP * np.arange(n + 1)


def limit_study(nu_max: int, digits: int = DEFAULT_DIGITS) -> List[LimitStudyRow]:
    """Track c_nu * sqrt(2*pi) and the sup-norm gap to the normal density.

    The scaled constant is computed at full working precision from the
    exact Gamma ratio; the sup-norm column is a diagnostic on a fixed
    0.1-step grid over [-8, 8] and is evaluated in IEEE double, ample for
    gaps that sit at 1e-1 .. 1e-4.
    """
    if nu_max < 2:
        raise ValueError(f"nu_max must be >= 2, got {nu_max}")
    ts = _grid()
    phi = np.exp(-ts * ts / 2) / math.sqrt(2 * math.pi)
    sqrt_2pi = reference_constant("sqrt_2pi", digits)
    rows: List[LimitStudyRow] = []
    for nu in range(1, nu_max + 1):
        c = normalization_constant(nu, digits).numeric
        c_scaled = c * sqrt_2pi
        f = float(c) * (1 + ts * ts / nu) ** (-(nu + 1) / 2.0)
        rows.append(
            LimitStudyRow(
                nu=nu,
                c_scaled=c_scaled,
                sup_distance=float(np.max(np.abs(f - phi))),
            )
        )
    return rows
