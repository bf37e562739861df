from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from superfock.scalars import (HALF, I, ONE, PiScalar, QQi, factorial_fraction,
                               gamma_half, poch)

small_ints = st.integers(min_value=-30, max_value=30)
denoms = st.integers(min_value=1, max_value=12)
qqis = st.builds(QQi, small_ints, small_ints, denoms)


def test_normalization():
    assert QQi(2, 4, 6) == QQi(1, 2, 3)
    assert QQi(1, 0, -2) == QQi(-1, 0, 2)
    assert QQi(Fraction(1, 2), Fraction(-3, 4)) == QQi(2, -3, 4)


def test_field_examples():
    assert I * I == QQi(-1)
    assert (ONE + I) * (ONE - I) == QQi(2)
    assert HALF + HALF == ONE
    assert QQi(3, 4, 5).conjugate() == QQi(3, -4, 5)
    assert QQi(1, 1) / QQi(1, 1) == ONE
    with pytest.raises(ZeroDivisionError):
        QQi(0).inverse()


@given(qqis, qqis, qqis)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a


@given(qqis)
def test_inverse_and_conjugation(a):
    if not a.is_zero():
        assert a * a.inverse() == ONE
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0


def test_str_format():
    assert str(QQi(3)) == "3"
    assert str(QQi(-3, 0, 4)) == "-3/4"
    assert str(QQi(0, 1)) == "1*i"
    assert str(QQi(1, -1, 2)) == "1/2-1/2*i"
    assert str(QQi(2, 3)) == "2+3*i"


def test_pochhammer_and_factorial():
    assert poch(Fraction(1, 2), 3) == Fraction(1, 2) * Fraction(3, 2) * Fraction(5, 2)
    assert poch(Fraction(-2), 3) == 0
    assert poch(Fraction(5), 0) == 1
    assert factorial_fraction(5) == 120


def test_gamma_half():
    assert gamma_half(2) == PiScalar.of(1)          # Gamma(1)
    assert gamma_half(4) == PiScalar.of(1)          # Gamma(2)
    assert gamma_half(6) == PiScalar.of(2)          # Gamma(3)
    assert gamma_half(1) == PiScalar.of(1, 1)       # Gamma(1/2) = sqrt(pi)
    assert gamma_half(3) == PiScalar.of(HALF, 1)    # Gamma(3/2)
    assert gamma_half(5) == PiScalar.of(QQi(3, 0, 4), 1)
    with pytest.raises(ValueError):
        gamma_half(0)


def test_pi_scalar_ring():
    a = PiScalar.of(QQi(1, 0, 2), 3)   # (1/2) pi^(3/2)
    b = PiScalar.of(2, 1)              # 2 pi^(1/2)
    assert a * b == PiScalar.of(1, 4)
    assert (a + a) / a == PiScalar.of(2)
    assert (a - a).is_zero()
    with pytest.raises(ValueError):
        (a + b).as_qqi()
    assert (a / a).as_qqi() == ONE
    assert str(PiScalar.of(QQi(1, 0, 4), 2)) == "(1/4)*pi"
