"""Exact calculator for base-b digit-sum identities of floor, ceiling,
fractional-part and sawtooth sums, with brute-force oracles for each.
"""

from .bigmath import (
    ceiling,
    floor,
    format_rational,
    frac,
    ilog,
    ipow,
    parse_rational,
    sawtooth,
)
from .identities import (
    SumSpec,
    ceil_double_sum,
    ceil_sum,
    ceil_sum_uncorrected,
    floor_double_sum,
    floor_sum,
    frac_double_sum,
    frac_sum,
    legendre_valuation,
    sawtooth_double_sum,
    sawtooth_sum,
)
from .radix import (
    ConjugateProfile,
    DigitExpansion,
    Partition,
    conjugate,
    digit_sum,
    expand,
    leading_pos,
    partition_of_digits,
    valuation,
)

__version__ = "0.1.0"

__all__ = [
    "floor",
    "ceiling",
    "frac",
    "sawtooth",
    "ilog",
    "ipow",
    "parse_rational",
    "format_rational",
    "DigitExpansion",
    "Partition",
    "ConjugateProfile",
    "expand",
    "digit_sum",
    "leading_pos",
    "valuation",
    "partition_of_digits",
    "conjugate",
    "SumSpec",
    "floor_sum",
    "floor_double_sum",
    "legendre_valuation",
    "ceil_sum",
    "ceil_sum_uncorrected",
    "ceil_double_sum",
    "frac_sum",
    "frac_double_sum",
    "sawtooth_sum",
    "sawtooth_double_sum",
]
