import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ringline.unbounded import (ExactError, Poly, RatFunc, exact_kernels, normalize_rational, poly_example,
                                poly_gcd, z_to_q_demo)


def P(p, *c):
    return Poly(p, c)


def test_gcd_example():
    assert poly_gcd(P(3, -1, 0, 1), P(3, -1, 1)) == P(3, -1, 1)
    assert poly_gcd(P(3, 2, 2), P(3, 0, 1)) == P(3, 1)
    assert poly_gcd(P(5), P(5)).is_zero()


def test_normal_forms():
    X = Poly.x(2)
    assert RatFunc(X, X) == RatFunc.of(P(2, 1))
    assert normalize_rational(2, -4) == Fraction(-1, 2)
    r = RatFunc(P(3, 2, 2), P(3, 2))  # (2+2X)/2 = 1+X
    assert r.den == P(3, 1) and r.num == P(3, 1, 1)
    with pytest.raises(ZeroDivisionError):
        RatFunc(X, P(2))
    with pytest.raises(ZeroDivisionError):
        divmod(X, P(2))


@settings(max_examples=300, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.data())
def test_division_property(p, data):
    coeffs = st.lists(st.integers(0, p - 1), max_size=6)
    a = Poly(p, tuple(data.draw(coeffs)))
    b = Poly(p, tuple(data.draw(coeffs)))
    if b.is_zero():
        return
    q, r = divmod(a, b)
    assert q * b + r == a and r.degree < b.degree
    g = poly_gcd(a, b)
    assert (a % g).is_zero() and (b % g).is_zero() and g.lead == 1


def test_kernels_certificate():
    cert = exact_kernels(3, cases=2000, seed=1)
    assert cert.ok, cert.failures()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_poly_example(p):
    cert = poly_example(p, samples=100, seed=7)
    assert cert.ok, cert.failures()
    assert cert.details["witness"]["X_divides_1"] is False


def test_poly_example_decomposition_of_1_x():
    X = RatFunc.of(Poly.x(3))
    one = RatFunc.of(P(3, 1))
    t = X / X
    assert t == one and (one - t).is_zero()


def test_poly_example_rejects_composite():
    with pytest.raises(ExactError):
        poly_example(4)


def test_z_to_q():
    cert = z_to_q_demo(10)
    assert cert.ok, cert.failures()
    assert cert.details["z_points"] == cert.details["q_points"]
    # independent count: coprime pairs up to sign in the window
    h = 10
    from math import gcd
    n = sum(1 for a in range(-h, h + 1) for b in range(-h, h + 1) if gcd(a, b) == 1) // 2
    assert cert.details["z_points"] == n
    with pytest.raises(ExactError):
        z_to_q_demo(1)
