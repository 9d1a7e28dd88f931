import pytest
from hypothesis import given, strategies as st

from folded_rs.errors import ParameterError
from folded_rs.field import FieldElement, arith, is_prime, make_field, multiplicative_order, power

PRIMES = [p for p in range(2, 258) if all(p % d for d in range(2, p))]


def test_make_field_q13_primitive():
    F = make_field(13, 12)
    assert (F.gamma, F.order) == (2, 12)
    # brute force: 2^t != 1 for t = 1..11
    assert all(pow(2, t, 13) != 1 for t in range(1, 12))
    assert pow(2, 12, 13) == 1


def test_make_field_gf2():
    F = make_field(2, 1)
    assert (F.gamma, F.order) == (1, 1)


def test_make_field_rejects_composite():
    with pytest.raises(ParameterError):
        make_field(12, 4)


def test_make_field_rejects_impossible_order():
    with pytest.raises(ParameterError):
        make_field(13, 13)


def test_explicit_gamma_checked():
    assert make_field(13, 6, gamma=4).order == 6
    with pytest.raises(ParameterError):
        make_field(13, 12, gamma=4)


def test_arith_examples():
    F = make_field(13)
    assert arith(F(7), F(9), "add") == F(3)
    for a in range(13):
        assert arith(F(a), F(1), "mul") == F(a)
    with pytest.raises(ZeroDivisionError):
        arith(F(5), F(0), "div")


def test_pow_examples():
    F = make_field(13)
    assert power(F(2), 12) == F(1)
    assert power(F(2), 0) == F(1)
    assert power(F(0), 3) == F(0)
    assert power(F(0), 0) == F(1)  # documented convention


@pytest.mark.parametrize("q", PRIMES)
def test_inverse_exhaustive(q):
    F = make_field(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [2, 3, 13, 73, 101, 257])
def test_gamma_order_exact(q):
    F = make_field(q)
    assert pow(F.gamma, F.order, q) == 1
    assert all(pow(F.gamma, t, q) != 1 for t in range(1, F.order))
    assert F.order == q - 1


def test_is_prime_matches_sieve():
    assert [p for p in range(258) if is_prime(p)] == PRIMES


@given(st.integers(0, 12), st.integers(0, 50), st.integers(0, 50))
def test_pow_adds_exponents(a, e1, e2):
    F = make_field(13)
    x = F(a)
    assert x ** (e1 + e2) == (x ** e1) * (x ** e2)


def test_elements_stay_reduced():
    F = make_field(13)
    with pytest.raises(ParameterError):
        FieldElement(13, F)
    x = F(12) + F(12)
    assert x.value == 11
    assert (F(3) - F(5)).value == 11
    assert (F(3) / F(5)) * F(5) == F(3)
    assert -F(0) == F(0)


def test_multiplicative_order_small():
    assert multiplicative_order(12, 13) == 2
    assert multiplicative_order(3, 13) == 3
