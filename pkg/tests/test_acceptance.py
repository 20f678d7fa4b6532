"""Acceptance gate: one test per criterion, exact equality everywhere.

Each test prints a PASS/FAIL line (visible with `pytest -s` or on failure).
Run the whole gate with:  pytest tests/test_acceptance.py -v -s
"""

import random
import time
from fractions import Fraction

import pytest

from radixsums import identities as ident
from radixsums import oracle, radix


def report(name: str, ok: bool) -> None:
    print(f"{'PASS' if ok else 'FAIL'}  {name}")
    assert ok


def test_criterion_01_floor_sum_oracle_equivalence():
    bases = (2, 3, 4, 5, 6, 7, 8, 9, 10, 16)
    start = time.monotonic()
    ok = all(
        ident.floor_sum(n, b, j) == oracle.floor_sum_direct(n, b, j)
        for n in range(0, 4097)
        for b in bases
        for j in range(b)
    )
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 60.0
    report(f"criterion 1: floor closed form = oracle, n<=4096, 10 bases ({elapsed:.1f}s)", ok)


def test_criterion_02_floor_double_sum_is_n():
    bases = (2, 3, 4, 5, 6, 7, 8, 9, 10, 16)
    ok = all(
        sum(ident.floor_sum(n, b, j) for j in range(1, b)) == n
        for n in range(0, 4097)
        for b in bases
    )
    report("criterion 2: sum over j of floor_sum recomposes n", ok)


def test_criterion_03_worked_base3_example():
    e = radix.expand(1024, 3)
    ok = (
        e.digits == (1, 2, 2, 1, 0, 1, 1)
        and e.render() == "(1101221)_3"
        and radix.digit_sum(1024, 3) == 8
        and radix.partition_of_digits(e).parts == (2, 2, 1, 1, 1, 1, 0)
        and radix.conjugate(e).counts == (6, 2)
    )
    report("criterion 3: 1024 = (1101221)_3, s=8, lambda=(2,2,1,1,1,1,0), lambda'=(6,2)", ok)


def test_criterion_04_legendre_valuation():
    ok = ident.legendre_valuation(10, 2) == 8
    ok = ok and all(
        ident.legendre_valuation(n, p) == oracle.factorial_valuation_direct(n, p)
        for p in (2, 3, 5, 7, 11)
        for n in range(0, 201)
    )
    report("criterion 4: Legendre formula = factorial trial division, n<=200", ok)


def test_criterion_05_ceil_sum_integer_x():
    ok = all(
        ident.ceil_sum(n, b, j) == oracle.ceil_sum_direct(n, b, j)
        for n in range(1, 4097)
        for b in range(2, 11)
        for j in range(1, b)
    )
    report("criterion 5: ceiling closed form = oracle for integer x, n<=4096", ok)


def test_criterion_06_ceil_sum_rational_x_and_edge_case():
    ok = all(
        ident.ceil_sum(Fraction(t, 8), b, j) == oracle.ceil_sum_direct(Fraction(t, 8), b, j)
        for t in range(8, 4097)
        for b in (2, 3, 10)
        for j in range(1, b)
    )
    # The uncorrected expression must overcount by exactly 1 here.
    x = Fraction(15, 2)
    ok = ok and oracle.ceil_sum_direct(x, 2, 1) == 10
    ok = ok and ident.ceil_sum_uncorrected(x, 2, 1) == 11
    ok = ok and all(
        ident.ceil_double_sum(Fraction(t, 8), b)
        == sum(oracle.ceil_sum_direct(Fraction(t, 8), b, j) for j in range(1, b))
        for t in range(8, 4097)
        for b in (2, 3, 10)
    )
    report("criterion 6: ceiling for rational x incl. power-of-base edge; double sum exact", ok)


def test_criterion_07_frac_and_sawtooth_oracle_equivalence():
    ok = all(
        ident.frac_sum(n, b, j) == oracle.frac_sum_direct(n, b, j)
        and ident.sawtooth_sum(n, b, j) == oracle.sawtooth_sum_direct(n, b, j)
        for n in range(1, 2049)
        for b in range(2, 9)
        for j in range(1, b)
    )
    ok = ok and ident.frac_sum(5, 2, 1) == Fraction(7, 8)
    ok = ok and ident.sawtooth_sum(5, 2, 1) == Fraction(-1, 8)
    report("criterion 7: fractional and sawtooth closed forms = oracles, n<=2048", ok)


def test_criterion_08_double_sum_corollaries():
    ok = True
    for n in range(1, 2049):
        for b in range(2, 9):
            m = radix.leading_pos(n, b)
            fd = ident.frac_double_sum(n, b)
            sd = ident.sawtooth_double_sum(n, b)
            ok = ok and fd == Fraction((m + 1) * (b - 1), 2) - Fraction(n, b ** (m + 1))
            ok = ok and sd == Fraction(1, 2) - Fraction(n, b ** (m + 1))
            ok = ok and fd == sum(ident.frac_sum(n, b, j) for j in range(1, b))
            ok = ok and sd == sum(ident.sawtooth_sum(n, b, j) for j in range(1, b))
    report("criterion 8: fractional/sawtooth double-sum corollaries, exact", ok)


def test_criterion_09_hermite_replication():
    rng = random.Random(20240817)
    ok = all(
        oracle.hermite_check(
            Fraction(rng.randint(-(10**6), 10**6), rng.randint(1, 10**6)),
            rng.randint(1, 64),
        )
        for _ in range(10**4)
    )
    report("criterion 9: Hermite replication identity on 10^4 random rationals", ok)


def test_criterion_10_lemma1_and_integer_term():
    rng = random.Random(421)
    ok = True
    for b in (2, 3, 10):
        for _ in range(10**4):
            digits = [rng.randrange(b) for _ in range(rng.randint(1, 10))]
            j = rng.randrange(b)
            got = oracle.lemma1_tail_floor(digits, j, b)
            ok = ok and got == (1 if digits[-1] + j >= b else 0)
    for n in range(1, 2049):
        for b in range(2, 9):
            nu = radix.valuation(n, b)
            low = radix.expand(n, b).digits[nu]
            for j in range(1, b):
                got = oracle.integer_term_locator(n, b, j)
                ok = ok and got == (nu if low == b - j else None)
    report("criterion 10: tail-floor lemma and unique-integer-term remark", ok)


def test_criterion_11_random_256_bit_scale_check():
    start = time.monotonic()
    ok = True
    for b in (2, 3, 10):
        rng = random.Random(f"2025:{b}")
        for _ in range(100):
            n = rng.getrandbits(256) | (1 << 255)
            for j in range(b):
                ok = ok and ident.floor_sum(n, b, j) == oracle.floor_sum_direct(n, b, j)
            for j in range(1, b):
                ok = ok and ident.ceil_sum(n, b, j) == oracle.ceil_sum_direct(n, b, j)
                ok = ok and ident.frac_sum(n, b, j) == oracle.frac_sum_direct(n, b, j)
                ok = ok and ident.sawtooth_sum(n, b, j) == oracle.sawtooth_sum_direct(n, b, j)
            ok = ok and ident.floor_double_sum(n, b) == n
            ok = ok and ident.ceil_double_sum(n, b) == sum(
                oracle.ceil_sum_direct(n, b, j) for j in range(1, b)
            )
            ok = ok and ident.frac_double_sum(n, b) == sum(
                ident.frac_sum(n, b, j) for j in range(1, b)
            )
            ok = ok and ident.sawtooth_double_sum(n, b) == sum(
                ident.sawtooth_sum(n, b, j) for j in range(1, b)
            )
    elapsed = time.monotonic() - start
    ok = ok and elapsed < 10.0
    report(f"criterion 11: 100 random 256-bit n per base, all families ({elapsed:.1f}s)", ok)
