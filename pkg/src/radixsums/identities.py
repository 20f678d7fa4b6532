"""Closed-form evaluators for the floor, ceiling, fractional-part and
sawtooth digit-sum identities, plus the Legendre factorial valuation.

Every function returns an exact int or Fraction computed from a single digit
expansion pass. The matching brute-force evaluators live in `oracle`, which
never imports this module, so a disagreement between the two is meaningful.

Known edge case for the ceiling sum with non-integer x: the closed form is
stated with m = floor(log_b ceil(x)), but the sum runs over
0 <= k <= log_b x. When ceil(x) is exactly b**m and x is not an integer,
the sum has one fewer term (that missing term is always 1), so `ceil_sum`
subtracts an indicator for that case. Regression point: x = 15/2, b = 2,
j = 1 gives a direct sum of 10 while the uncorrected expression gives 11.
`ceil_sum_uncorrected` keeps the raw expression around so the discrepancy
stays visible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigmath import ceiling, ilog
from .radix import conjugate, expand, leading_pos, valuation

__all__ = [
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

SINGLE_FAMILIES = ("floor", "ceil", "frac", "sawtooth")
DOUBLE_FAMILIES = ("floor-double", "ceil-double", "frac-double", "sawtooth-double")


@dataclass(frozen=True)
class SumSpec:
    """Which identity to evaluate: family, argument, base, and j (single scope).

    family is one of the four single families or their "-double" variants.
    n_or_x is an int for all families; the ceil family additionally accepts
    a Fraction >= 1.
    """

    family: str
    n_or_x: int | Fraction
    base: int
    j: int | None = None

    def __post_init__(self) -> None:
        if self.family not in SINGLE_FAMILIES + DOUBLE_FAMILIES:
            raise ValueError(f"unknown family: {self.family}")
        if self.base < 2:
            raise ValueError(f"base must be >= 2, got {self.base}")
        if self.family in SINGLE_FAMILIES:
            if self.j is None:
                raise ValueError(f"family {self.family} requires j")
            j_lo = 0 if self.family == "floor" else 1
            if not j_lo <= self.j < self.base:
                raise ValueError(
                    f"j must satisfy {j_lo} <= j < {self.base}, got {self.j}"
                )
        elif self.j is not None:
            raise ValueError("double-scope families take no j")
        if not self.family.startswith("ceil") and not isinstance(self.n_or_x, int):
            raise ValueError(f"family {self.family} requires an integer argument")


def _check_args(n: int, b: int, j: int | None, j_min: int = 0, n_min: int = 0) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if n < n_min:
        raise ValueError(f"n must be >= {n_min}, got {n}")
    if j is not None and not j_min <= j < b:
        raise ValueError(f"j must satisfy {j_min} <= j < {b}, got {j}")


def _exact_div(num: int, den: int) -> int:
    # (b-1) always divides n - s_b(n); if it ever did not, that would be an
    # algebra bug worth a loud failure rather than a truncation.
    q, r = divmod(num, den)
    if r != 0:
        raise ArithmeticError(f"inexact division {num}/{den}")
    return q


def floor_sum(n: int, b: int, j: int) -> int:
    """Sum over k >= 1 of floor((n + j*b**(k-1)) / b**k), in closed form:
    (n - s_b(n)) / (b-1) + (count of digits >= b-j).
    """
    _check_args(n, b, j)
    e = expand(n, b)
    s = sum(e.digits)
    return _exact_div(n - s, b - 1) + conjugate(e).count_ge(b - j)


def floor_double_sum(n: int, b: int) -> int:
    """Sum of floor_sum over 0 < j < b; always equals n (checked)."""
    _check_args(n, b, None)
    total = sum(floor_sum(n, b, j) for j in range(1, b))
    if total != n:
        raise ArithmeticError(f"floor double sum {total} != n = {n}")
    return total


def legendre_valuation(n: int, p: int) -> int:
    """Multiplicity of p in n!, via (n - s_p(n)) / (p - 1).

    Primality of p is the caller's concern; the formula is evaluated as
    stated (it equals floor_sum(n, p, 0) for any p >= 2).
    """
    return floor_sum(n, p, 0)


def ceil_sum_uncorrected(x: Fraction | int, b: int, j: int) -> int:
    """The raw closed-form ceiling expression, with no edge-case correction:
    (n - s_b(n)) / (b-1) + m + (digits >= b-j) + [c_nu != b-j], n = ceil(x).

    For non-integer x with ceil(x) a power of b this overcounts by exactly 1;
    use `ceil_sum` for the value that matches the actual sum.
    """
    x = Fraction(x)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    _check_args(1, b, j, j_min=1)
    n = ceiling(x)
    e = expand(n, b)
    s = sum(e.digits)
    m = len(e.digits) - 1
    low = valuation(n, b)
    indicator = 1 if e.digits[low] != b - j else 0
    return _exact_div(n - s, b - 1) + m + conjugate(e).count_ge(b - j) + indicator


def ceil_sum(x: Fraction | int, b: int, j: int) -> int:
    """Sum over 0 <= k <= log_b(x) of ceil((x + j*b**k) / b**(k+1)).

    Equals the closed-form expression minus 1 exactly when the summation
    range loses its k = m term, i.e. when ilog(b, x) = m - 1 (ceil(x) is a
    power of b and x is not an integer).
    """
    x = Fraction(x)
    value = ceil_sum_uncorrected(x, b, j)
    m = leading_pos(ceiling(x), b)
    if ilog(b, x) == m - 1:
        value -= 1
    return value


def ceil_double_sum(x: Fraction | int, b: int) -> int:
    """Sum of ceil_sum over 0 < j < b: (b-1)*(floor(log_b x) + 1) + ceil(x) - 1.

    This form is exact for all rational x >= 1, including the edge family
    where ceil(x) is a power of b.
    """
    x = Fraction(x)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    return (b - 1) * (ilog(b, x) + 1) + ceiling(x) - 1


def frac_sum(n: int, b: int, j: int) -> Fraction:
    """Sum over 0 <= k <= m of frac((n + j*b**k) / b**(k+1)), in closed form:
    (s_b(n) - n/b**(m+1)) / (b-1) + (m+1)*j/b - (digits >= b-j).

    Requires n >= 1; the closed form needs the leading-digit position.
    """
    _check_args(n, b, j, j_min=1, n_min=1)
    e = expand(n, b)
    s = sum(e.digits)
    m = len(e.digits) - 1
    return (
        Fraction(s - Fraction(n, b ** (m + 1)), b - 1)
        + Fraction((m + 1) * j, b)
        - conjugate(e).count_ge(b - j)
    )


def frac_double_sum(n: int, b: int) -> Fraction:
    """Sum of frac_sum over 0 < j < b: (m+1)*(b-1)/2 - n/b**(m+1). Needs n >= 1."""
    _check_args(n, b, None, n_min=1)
    m = leading_pos(n, b)
    return Fraction((m + 1) * (b - 1), 2) - Fraction(n, b ** (m + 1))


def sawtooth_sum(n: int, b: int, j: int) -> Fraction:
    """Sum over 0 <= k <= m of the sawtooth of (n + j*b**k) / b**(k+1):
    frac-sum closed form shifted by (m+1)/2, plus 1/2 when the single
    integer term occurs (lowest nonzero digit equals b - j). Needs n >= 1.
    """
    _check_args(n, b, j, j_min=1, n_min=1)
    e = expand(n, b)
    m = len(e.digits) - 1
    hit = e.digits[valuation(n, b)] == b - j
    return frac_sum(n, b, j) - Fraction(m + 1, 2) + (Fraction(1, 2) if hit else 0)


def sawtooth_double_sum(n: int, b: int) -> Fraction:
    """Sum of sawtooth_sum over 0 < j < b: 1/2 - n/b**(m+1). Needs n >= 1."""
    _check_args(n, b, None, n_min=1)
    m = leading_pos(n, b)
    return Fraction(1, 2) - Fraction(n, b ** (m + 1))
