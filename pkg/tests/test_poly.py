import math

import pytest
from hypothesis import given, strategies as st

from folded_rs.errors import ParameterError, ParseError
from folded_rs.field import make_field
from folded_rs.poly import NEG_INF, Poly, poly_arith

F = make_field(13)
coeffs = st.lists(st.integers(0, 12), max_size=7)


def test_eval_examples():
    assert Poly.x(F).eval(2) == 2
    assert Poly.zero(F).eval(7) == 0
    assert Poly(F, [3, 5, 1]).eval(2) == (3 + 10 + 4) % 13 == 4


def test_dilate_examples():
    assert Poly.monomial(F, 2).dilate(2) == Poly(F, [0, 0, 4])
    p = Poly(F, [1, 2, 3])
    assert p.dilate(1) == p
    assert Poly.zero(F).dilate(5).is_zero()


def test_arith_examples():
    a = Poly(F, [1, 1])
    d = poly_arith(a, a, "sub")
    assert d.coeffs == () and d.is_zero()
    assert poly_arith(Poly(F, [1, 1]), Poly(F, [-1, 1]), "mul") == Poly(F, [12, 0, 1])
    assert poly_arith(Poly(F, [4, 5]), 0, "scalar_mul").is_zero()


def test_zero_degree_sentinel():
    assert Poly.zero(F).degree == NEG_INF
    assert Poly.zero(F).degree < 0
    assert Poly(F, [0, 0, 0]).degree == NEG_INF
    assert Poly(F, [5]).degree == 0


def test_field_mismatch():
    G = make_field(7)
    with pytest.raises(ParameterError):
        Poly(F, [1]) + Poly(G, [1])


def test_text_roundtrip():
    p = Poly(F, [3, 0, 7])
    assert p.to_text() == "3 0 7"
    assert Poly.from_text(F, "3 0 7") == p
    assert Poly.zero(F).to_text() == "0"
    assert Poly.from_text(F, "0").is_zero()
    with pytest.raises(ParseError):
        Poly.from_text(F, "1 x")
    with pytest.raises(ParseError):
        Poly.from_text(F, "13")


def test_valuation_and_shift():
    p = Poly(F, [0, 0, 3, 1])
    assert p.valuation() == 2
    assert p.shift_down(2) == Poly(F, [3, 1])
    assert Poly.zero(F).valuation() == math.inf
    with pytest.raises(ParameterError):
        p.shift_down(3)


@given(coeffs, coeffs)
def test_degree_of_product(a, b):
    p, r = Poly(F, a), Poly(F, b)
    if p.is_zero() or r.is_zero():
        assert (p * r).is_zero()
    else:
        assert (p * r).degree == p.degree + r.degree


@given(coeffs, st.integers(0, 12), st.integers(0, 12))
def test_dilate_matches_eval(a, c, x):
    p = Poly(F, a)
    assert p.dilate(c).eval(x) == p.eval(c * x % 13)


@given(coeffs, coeffs, st.integers(0, 12))
def test_ring_ops_pointwise(a, b, x):
    p, r = Poly(F, a), Poly(F, b)
    assert (p + r).eval(x) == (p.eval(x) + r.eval(x)) % 13
    assert (p - r).eval(x) == (p.eval(x) - r.eval(x)) % 13
    assert (p * r).eval(x) == p.eval(x) * r.eval(x) % 13


@given(coeffs, coeffs)
def test_canonical_form(a, b):
    for res in (Poly(F, a) + Poly(F, b), Poly(F, a) * Poly(F, b), Poly(F, a) - Poly(F, a)):
        assert not res.coeffs or res.coeffs[-1] != 0
