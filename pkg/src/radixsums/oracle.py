"""Brute-force ground truth for every identity.

Everything here is built from `bigmath` and `radix` primitives by direct
term-by-term summation with exact rationals. This module deliberately never
imports `identities`: when a closed form and its oracle disagree, the
disagreement means something.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigmath import ceiling, floor, frac, ilog, sawtooth
from .radix import leading_pos, valuation

__all__ = [
    "OracleReport",
    "floor_sum_direct",
    "ceil_sum_direct",
    "frac_sum_direct",
    "sawtooth_sum_direct",
    "lemma1_tail_floor",
    "hermite_check",
    "integer_term_locator",
    "factorial_valuation_direct",
]


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one closed-form-vs-direct comparison."""

    family: str
    inputs: tuple
    direct_value: Fraction
    closed_value: Fraction

    @property
    def match(self) -> bool:
        return self.direct_value == self.closed_value


def floor_sum_direct(n: int, b: int, j: int) -> int:
    """Term-by-term sum of floor((n + j*b**(k-1)) / b**k) for k = 1, 2, ...

    Stops at the first k with b**(k-1) > n: past that point n/b**k < 1/b,
    so every remaining term is floor(j/b + n/b**k) = 0.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if not 0 <= j < b:
        raise ValueError(f"j must satisfy 0 <= j < {b}, got {j}")
    total = 0
    power = 1  # b ** (k - 1)
    while power <= n:
        total += (n + j * power) // (power * b)
        power *= b
    return total


def ceil_sum_direct(x: Fraction | int, b: int, j: int) -> int:
    """Term-by-term sum of ceil((x + j*b**k) / b**(k+1)) for 0 <= k <= log_b x."""
    x = Fraction(x)
    if x < 1:
        raise ValueError(f"x must be >= 1, got {x}")
    if not 1 <= j < b:
        raise ValueError(f"j must satisfy 1 <= j < {b}, got {j}")
    total = 0
    power = 1  # b ** k
    for _ in range(ilog(b, x) + 1):
        total += ceiling((x + j * power) / (power * b))
        power *= b
    return total


def frac_sum_direct(n: int, b: int, j: int) -> Fraction:
    """Term-by-term sum of frac((n + j*b**k) / b**(k+1)) for 0 <= k <= m."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= j < b:
        raise ValueError(f"j must satisfy 1 <= j < {b}, got {j}")
    total = Fraction(0)
    power = 1
    for _ in range(leading_pos(n, b) + 1):
        total += frac(Fraction(n + j * power, power * b))
        power *= b
    return total


def sawtooth_sum_direct(n: int, b: int, j: int) -> Fraction:
    """Term-by-term sum of the sawtooth of (n + j*b**k) / b**(k+1), 0 <= k <= m."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= j < b:
        raise ValueError(f"j must satisfy 1 <= j < {b}, got {j}")
    total = Fraction(0)
    power = 1
    for _ in range(leading_pos(n, b) + 1):
        total += sawtooth(Fraction(n + j * power, power * b))
        power *= b
    return total


def lemma1_tail_floor(digits: list[int], j: int, b: int) -> int:
    """floor((c_k + j)/b + c_{k-1}/b**2 + ... + c_0/b**(k+1)) by exact
    rational arithmetic, where `digits` is the little-endian prefix
    [c_0, ..., c_k].

    The result is asserted to be the indicator [c_k + j >= b], which is the
    content of the tail-floor lemma.
    """
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")
    if not 0 <= j < b:
        raise ValueError(f"j must satisfy 0 <= j < {b}, got {j}")
    if not digits:
        raise ValueError("digit prefix must be nonempty")
    if any(not 0 <= d < b for d in digits):
        raise ValueError(f"digits out of range for base {b}: {digits}")
    k = len(digits) - 1
    total = Fraction(digits[k] + j, b)
    for i, d in enumerate(reversed(digits[:k]), start=2):
        total += Fraction(d, b**i)
    result = floor(total)
    assert result == (1 if digits[k] + j >= b else 0)
    return result


def hermite_check(x: Fraction | int, m: int) -> bool:
    """True iff floor(x) + floor(x + 1/m) + ... + floor(x + (m-1)/m)
    equals floor(m*x) for this (x, m). Holds for every rational x, m >= 1.
    """
    if m < 1:
        raise ValueError(f"m must be >= 1, got {m}")
    x = Fraction(x)
    left = sum(floor(x + Fraction(i, m)) for i in range(m))
    return left == floor(m * x)


def integer_term_locator(n: int, b: int, j: int) -> int | None:
    """Scan k = 0..m for integrality of (n + j*b**k) / b**(k+1).

    Returns the unique such k, or None. Asserts the structural fact: the hit
    is at k = valuation(n, b) exactly when the lowest nonzero digit equals
    b - j, and there is never more than one hit.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 1 <= j < b:
        raise ValueError(f"j must satisfy 1 <= j < {b}, got {j}")
    hits = []
    power = 1
    for k in range(leading_pos(n, b) + 1):
        if (n + j * power) % (power * b) == 0:
            hits.append(k)
        power *= b
    assert len(hits) <= 1
    nu = valuation(n, b)
    expect_hit = (n // b**nu) % b == b - j
    assert (hits == [nu]) if expect_hit else (hits == [])
    return hits[0] if hits else None


def factorial_valuation_direct(n: int, p: int) -> int:
    """Multiplicity of p in n! by trial division of each factor 1..n.

    Independent of the floor-sum route entirely.
    """
    if p < 2:
        raise ValueError(f"p must be >= 2, got {p}")
    total = 0
    for i in range(2, n + 1):
        while i % p == 0:
            i //= p
            total += 1
    return total
