from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from unimodal.poly import (
    Poly, Poly2, q_integer, trunc_exp, trunc_inverse, trunc_log, trunc_mul, trunc_pow,
)

fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.lists(fracs, max_size=6).map(Poly)


def test_zero_polynomial_degree_and_trimming():
    assert Poly([0, 0]).degree == -1
    assert Poly([1, 2, 0, 0]).coeffs == (1, 2)
    assert not Poly(())
    assert Poly([3]) == 3 and Poly(()) == 0


def test_arithmetic_and_eval():
    q = Poly.var()
    p = (1 - q) * (1 + q + q * q)
    assert p == 1 - q ** 3
    assert p(2) == -7
    assert (q ** 2 - q).negate_variable() == q ** 2 + q
    assert (p / 2).coeffs[0] == Fraction(1, 2)


def test_mixing_variables_is_rejected():
    with pytest.raises(TypeError):
        Poly.var("q") + Poly.var("t")


def test_exact_division():
    q = Poly.var()
    assert (1 - q ** 4).divide_exact(1 - q) == 1 + q + q ** 2 + q ** 3
    with pytest.raises(ArithmeticError):
        (1 + q ** 2).divide_exact(1 - q)


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0


@given(polys, fracs)
def test_evaluation_is_a_homomorphism(a, v):
    b = Poly([1, -1, 2])
    assert (a * b)(v) == a(v) * b(v)
    assert (a + b)(v) == a(v) + b(v)


def test_poly2_basics():
    x, y = Poly2.x(), Poly2.y()
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (x * y + 1)(2, 3) == 7
    assert x - x == 0
    assert str(y + x * y) == "y + x*y"


def test_q_integer():
    q = Poly.var()
    assert q_integer(0, q) == 0
    assert q_integer(3, q) == 1 + q + q ** 2
    assert q_integer(4, 1) == 4


def test_truncated_series_helpers():
    t = Poly.var("t")
    N = 10
    geometric = trunc_inverse(1 - 2 * t, N)
    assert geometric.coeffs == tuple(Fraction(2 ** n) for n in range(N + 1))
    assert trunc_mul(geometric, 1 - 2 * t, N) == Poly.const(1, "t")
    assert trunc_pow(1 + t, 12, 5) == Poly([1, 12, 66, 220, 495, 792], "t")
    # exp(t) coefficients 1/n!
    e = trunc_exp(t, 6)
    assert e.coeffs[-1] == Fraction(1, 720)


@given(st.lists(fracs, min_size=1, max_size=6))
def test_exp_log_round_trip(cs):
    f = Poly([0] + cs, "t")
    N = 8
    g = trunc_exp(f, N)
    assert trunc_log(g, N) == Poly(f.coeffs[:N + 1], "t")
