"""b-ary digit expansions and the digit statistics the closed forms consume:
digit sum, leading-digit position, b-adic valuation, the digit partition and
its conjugate.

Convention: n = 0 expands to the EMPTY digit sequence (not [0]). This makes
the digit sum 0 and the conjugate profile all zeros with no special-casing,
while the leading position and valuation stay undefined at 0 (enforced by
preconditions).
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "DigitExpansion",
    "Partition",
    "ConjugateProfile",
    "expand",
    "digit_sum",
    "leading_pos",
    "valuation",
    "partition_of_digits",
    "conjugate",
]


def _check_base(b: int) -> None:
    if b < 2:
        raise ValueError(f"base must be >= 2, got {b}")


@dataclass(frozen=True)
class DigitExpansion:
    """Little-endian b-ary digits of a nonnegative integer.

    digits[s] is the coefficient of base**s. The most significant digit is
    nonzero, except that 0 has the empty expansion.
    """

    base: int
    digits: tuple[int, ...]

    def value(self) -> int:
        """Reconstruct the integer this expansion represents."""
        n = 0
        for d in reversed(self.digits):
            n = n * self.base + d
        return n

    def render(self) -> str:
        """Most-significant-first rendering with base annotation.

        Digits of bases above 10 can exceed one character, so they are
        comma-separated there: "(12,3,0)_17" vs "(1101221)_3". The empty
        expansion renders as "()_b".
        """
        sep = "" if self.base <= 10 else ","
        body = sep.join(str(d) for d in reversed(self.digits))
        return f"({body})_{self.base}"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of nonnegative integers."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("parts must be weakly decreasing")

    def total(self) -> int:
        return sum(self.parts)


@dataclass(frozen=True)
class ConjugateProfile:
    """Conjugate of the digit partition for a given base.

    counts has length base - 1; count_ge(t) for t in 1..base-1 is the number
    of digits >= t. count_ge(base) is 0 by convention (no digit reaches the
    base), which keeps the j = 0 Legendre case inside the same formula.
    """

    base: int
    counts: tuple[int, ...]

    def count_ge(self, t: int) -> int:
        if not 1 <= t <= self.base:
            raise ValueError(f"threshold must be in 1..{self.base}, got {t}")
        if t == self.base:
            return 0
        return self.counts[t - 1]

    def total(self) -> int:
        return sum(self.counts)


def expand(n: int, b: int) -> DigitExpansion:
    """Little-endian b-ary expansion of n >= 0; empty for n = 0."""
    _check_base(b)
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    digits = []
    while n > 0:
        n, d = divmod(n, b)
        digits.append(d)
    return DigitExpansion(base=b, digits=tuple(digits))


def digit_sum(n: int, b: int) -> int:
    """Sum of the b-ary digits of n."""
    return sum(expand(n, b).digits)


def leading_pos(n: int, b: int) -> int:
    """Position m of the leading digit: b**m <= n < b**(m+1). Requires n >= 1."""
    _check_base(b)
    if n < 1:
        raise ValueError("leading digit position is undefined for n = 0")
    return len(expand(n, b).digits) - 1


def valuation(n: int, b: int) -> int:
    """Largest k with b**k dividing n; the index of the lowest nonzero digit.

    Requires n >= 1 (every power divides 0).
    """
    _check_base(b)
    if n < 1:
        raise ValueError("valuation is undefined for n = 0")
    k = 0
    while n % b == 0:
        n //= b
        k += 1
    return k


def partition_of_digits(e: DigitExpansion) -> Partition:
    """The digit multiset sorted weakly decreasing."""
    return Partition(parts=tuple(sorted(e.digits, reverse=True)))


def conjugate(e: DigitExpansion) -> ConjugateProfile:
    """Conjugate partition: count_ge(t) = #{s : digits[s] >= t} for t = 1..b-1."""
    counts = [0] * (e.base - 1)
    for d in e.digits:
        for t in range(1, d + 1):
            counts[t - 1] += 1
    return ConjugateProfile(base=e.base, counts=tuple(counts))
