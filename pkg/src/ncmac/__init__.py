"""Exact algebra for noncommutative chromatic functions, Macdonald
polynomials, and Hecke algebra traces."""

from ncmac.rings import (
    KERNEL_IMPLEMENTATION,
    LaurentPoly,
    NonExactDivision,
    RatFunc,
    q_int,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_IMPLEMENTATION",
    "LaurentPoly",
    "NonExactDivision",
    "RatFunc",
    "q_int",
    "__version__",
]
