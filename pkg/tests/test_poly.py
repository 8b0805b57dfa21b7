import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliamilnor.poly import ParseError, Polynomial, RingMismatchError, Scalar, parse_poly

from strategies import RING, polynomials, scalars

R2 = ("x", "y")


def test_parse_and_print():
    p = parse_poly("x^2 - 3*x*y + 1/2", R2)
    assert p.degree() == 2
    assert parse_poly(str(p), R2) == p
    assert parse_poly("(x+y)**2", R2) == parse_poly("x^2 + 2*x*y + y^2", R2)


def test_gaussian_coefficients():
    p = parse_poly("(1+i)*x", R2)
    q = parse_poly("(1-i)*x", R2)
    assert p * q == parse_poly("2*x^2", R2)
    assert Scalar(0, 1) * Scalar(0, 1) == Scalar(-1)


def test_parse_errors_point_at_the_problem():
    with pytest.raises(ParseError):
        parse_poly("x + w", R2)
    with pytest.raises(ParseError):
        parse_poly("x +", R2)
    with pytest.raises(ParseError):
        parse_poly("(x", R2)


def test_ring_mismatch():
    with pytest.raises(RingMismatchError):
        parse_poly("x", R2) + parse_poly("x", ("x", "z"))


def test_evaluate_and_translate():
    p = parse_poly("x^2*y - y + 4", R2)
    assert p.evaluate([2, 3]) == Scalar(13)
    q = p.translate([1, -1])
    assert q.evaluate([0, 0]) == p.evaluate([1, -1])


def test_scalar_times_polynomial():
    p = parse_poly("x + y", R2)
    assert Scalar(2) * p == p + p
    assert p * Scalar(2) == Scalar(2) * p


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@settings(max_examples=60, deadline=None)
@given(polynomials(), polynomials(), st.sampled_from(RING))
def test_leibniz_rule(p, q, v):
    assert (p * q).diff(v) == p * q.diff(v) + q * p.diff(v)


@settings(max_examples=60, deadline=None)
@given(polynomials(), st.lists(scalars, min_size=3, max_size=3))
def test_translate_round_trip(p, a):
    assert p.translate(a).translate([-c for c in a]) == p


@settings(max_examples=60, deadline=None)
@given(polynomials())
def test_print_parse_round_trip(p):
    assert parse_poly(str(p), RING) == p


@settings(max_examples=40, deadline=None)
@given(polynomials())
def test_zero_polynomial_is_neutral(p):
    zero = Polynomial.zero(RING)
    assert p + zero == p
    assert (p * zero).is_zero()
    assert (p - p).is_zero()
