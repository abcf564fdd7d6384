from fractions import Fraction

import pytest
from hypothesis import given

from steinberg.gaussian import I, ONE, ZERO, GaussianRational, gr

from strategies import gaussians


def as_pair(z):
    return (z.re, z.im)


def ref_mul(a, b):
    return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])


@given(gaussians, gaussians)
def test_field_operations_match_pairs_of_fractions(a, b):
    pa, pb = as_pair(a), as_pair(b)
    assert as_pair(a + b) == (pa[0] + pb[0], pa[1] + pb[1])
    assert as_pair(a - b) == (pa[0] - pb[0], pa[1] - pb[1])
    assert as_pair(a * b) == ref_mul(pa, pb)
    if b:
        q = a / b
        assert q * b == a


@given(gaussians)
def test_conjugate_and_modulus(a):
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0
    assert (a * a.conjugate()).re == a.abs2()
    assert abs(complex(a)) ** 2 == pytest.approx(float(a.abs2()))


@given(gaussians)
def test_list_round_trip(a):
    assert GaussianRational.from_list(a.to_list()) == a


def test_normal_form_and_hash():
    a = GaussianRational(Fraction(2, 4), Fraction(-3, 6))
    b = GaussianRational.from_list([1, 2, -1, 2])
    assert a == b and hash(a) == hash(b)
    assert a.denominator == 2 and a.numerator == (1, -1)


def test_constants_and_coercion():
    assert I * I == -ONE
    assert gr(0) == ZERO and not ZERO
    assert gr(complex(1, 2)) == GaussianRational(1, 2)
    assert gr(Fraction(1, 3)) * 3 == ONE


def test_format():
    z = GaussianRational(Fraction(1, 3), -1)
    assert str(z) == "1/3-i"
    assert z.format(floating=True).startswith("0.333333333333")


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
