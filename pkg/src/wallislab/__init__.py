"""High-precision cross-verification of the classical Wallis-product
identities: exact Gamma/Beta algebra, Bernoulli numbers and even zeta
values, Student-t normalization constants, and the pi / log(pi/2) series
they tie together.
"""

__version__ = "0.1.0"

from .numkit import (
    BigRational,
    DEFAULT_DIGITS,
    ErrorBoundedValue,
    MethodId,
    PrecisionReal,
    double_factorial,
    reference_constant,
)

__all__ = [
    "BigRational",
    "DEFAULT_DIGITS",
    "ErrorBoundedValue",
    "MethodId",
    "PrecisionReal",
    "double_factorial",
    "reference_constant",
    "__version__",
]
