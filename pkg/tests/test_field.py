from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from socle_lab import GF, QQ
from socle_lab.errors import CoefficientError


def test_rationals_lowest_terms():
    assert QQ.coerce(Fraction(2, 4)) == Fraction(1, 2)
    assert QQ.from_fraction(6, -4) == Fraction(-3, 2)
    assert QQ.from_fraction(6, -4).denominator > 0


def test_prime_field_basics():
    F = GF(101)
    assert F.coerce(-1) == 100
    assert F.add(60, 60) == 19
    assert F.mul(F.invert(7), 7) == 1
    assert F.from_fraction(1, 2) == 51


def test_gf_rejects_composite_and_huge():
    with pytest.raises(CoefficientError):
        GF(100)
    with pytest.raises(CoefficientError):
        GF(1 << 63)


def test_gf_accepts_large_prime():
    F = GF((1 << 61) - 1)
    assert F.mul(F.invert(12345), 12345) == 1


@given(st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))
def test_field_ops_match_fraction_arithmetic(a, b):
    F = GF(101)
    fa, fb = F.coerce(a), F.coerce(b)
    assert F.add(fa, fb) == (a + b) % 101
    assert F.sub(fa, fb) == (a - b) % 101
    assert F.mul(fa, fb) == (a * b) % 101


def test_zero_division_rejected():
    with pytest.raises(CoefficientError):
        GF(7).invert(0)
    with pytest.raises(CoefficientError):
        QQ.invert(Fraction(0))
    with pytest.raises(CoefficientError):
        GF(7).from_fraction(1, 7)
