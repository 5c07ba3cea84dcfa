import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from lietori.errors import DivisionByZero, NotRootOfUnity, ParseError
from lietori.scalars import ONE, ZERO, Scalar, as_scalar, format_scalar, parse_scalar, root_of_unity, root_order, sqrt_root_of_unity

conductors = st.sampled_from([1, 2, 3, 4, 6, 8, 12])


@st.composite
def scalars(draw):
    n = draw(conductors)
    terms = draw(st.lists(st.tuples(st.integers(0, n - 1), st.fractions(min_value=-9, max_value=9, max_denominator=6)), max_size=3))
    s = ZERO
    for k, c in terms:
        s = s + Scalar.rational(c) * root_of_unity(k, n)
    return s


def close(a, b):
    return abs(a - b) < 1e-9


@given(scalars(), scalars())
def test_ring_ops_match_complex_embedding(a, b):
    assert close((a + b).to_complex(), a.to_complex() + b.to_complex())
    assert close((a * b).to_complex(), a.to_complex() * b.to_complex())
    assert close((a - b).to_complex(), a.to_complex() - b.to_complex())


@given(scalars())
def test_inverse(a):
    if a:
        assert a * a.inv() == ONE
    else:
        with pytest.raises(DivisionByZero):
            a.inv()


@given(scalars(), scalars(), scalars())
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(st.integers(0, 23), st.integers(1, 24))
def test_root_of_unity_value(k, n):
    assert close(root_of_unity(k, n).to_complex(), cmath.exp(2j * cmath.pi * k / n))


@given(scalars())
def test_format_parse_roundtrip(a):
    n = max(a.n, 1)
    assert parse_scalar(format_scalar(a), n) == a


def test_parse_examples():
    assert parse_scalar("z", 4) == root_of_unity(1, 4)
    assert parse_scalar("z", 4) * parse_scalar("z", 4) == -ONE
    assert parse_scalar("1/2 - 1*z^3", 8) == Scalar.rational(Fraction(1, 2)) - root_of_unity(3, 8)
    with pytest.raises(ParseError):
        parse_scalar("1 + y", 4)


def test_equality_across_conductors():
    assert root_of_unity(1, 2) == -ONE
    assert root_of_unity(2, 4) == root_of_unity(3, 6)
    assert as_scalar(Fraction(3, 1)) == as_scalar(3)


def test_root_order_and_sqrt():
    assert root_order(root_of_unity(2, 6)) == 3
    assert root_order(as_scalar(2)) is None
    r = sqrt_root_of_unity(root_of_unity(1, 3))
    assert r * r == root_of_unity(1, 3)
    with pytest.raises(NotRootOfUnity):
        sqrt_root_of_unity(as_scalar(2))
