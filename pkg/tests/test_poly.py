import pytest
from hypothesis import given
from hypothesis import strategies as st

from tribpoly import ONE, Polynomial, X, ZERO

polys = st.lists(st.integers(min_value=-9, max_value=9), max_size=6).map(Polynomial)
points = st.integers(min_value=-5, max_value=5)


def test_canonical_form():
    assert Polynomial((1, 2, 0, 0)).coeffs == (1, 2)
    assert Polynomial((0, 0, 0)).coeffs == ()
    assert Polynomial().is_zero
    assert Polynomial((0,)) == ZERO
    assert Polynomial((5,)) == 5


def test_zero_behaviour():
    assert ZERO + ZERO == ZERO
    assert ZERO * Polynomial((1, 2)) == ZERO
    assert not ZERO
    assert ZERO.degree == -1


def test_product_example():
    x_sq = Polynomial((0, 0, 1))
    assert x_sq * Polynomial((0, 1, 0, 0, 1)) == Polynomial((0, 0, 0, 1, 0, 0, 1))


def test_difference_of_squares():
    assert (X + ONE) * (X - ONE) == Polynomial((-1, 0, 1))


def test_monomial_scale():
    p = Polynomial((1, 2))  # 2x + 1
    assert p.times_monomial(3, 2) == Polynomial((0, 0, 3, 6))
    assert p.times_monomial(0, 2) == ZERO
    assert ZERO.times_monomial(4, 1) == ZERO
    with pytest.raises(ValueError):
        p.times_monomial(1, -1)


def test_evaluate():
    p = Polynomial.from_terms({10: 1, 7: 4, 4: 3})
    assert p.evaluate(1) == 8
    assert p.evaluate(0) == 0
    assert ZERO.evaluate(7) == 0
    assert Polynomial((3,)).evaluate(100) == 3


def test_substitute_power():
    p = Polynomial.from_terms({4: 1, 2: 3})
    assert p.substitute_power(3) == Polynomial.from_terms({12: 1, 6: 3})
    assert p.substitute_power(1) == p
    assert ZERO.substitute_power(2) == ZERO
    with pytest.raises(ValueError):
        p.substitute_power(0)


def test_rejects_floats():
    with pytest.raises(TypeError):
        Polynomial((1.0, 2))
    with pytest.raises(TypeError):
        Polynomial((1,)).evaluate(2.0)


def test_from_terms_validation():
    with pytest.raises(ValueError):
        Polynomial.from_terms({-1: 2})
    # zero coefficients on negative exponents are simply dropped
    assert Polynomial.from_terms({-3: 0, 2: 1}) == Polynomial((0, 0, 1))


def test_rendering():
    assert str(Polynomial.from_terms({10: 1, 7: 4, 4: 3})) == "x^10 + 4*x^7 + 3*x^4"
    assert str(ZERO) == "0"
    assert str(Polynomial((1, 0, 0, 2, 0, 0, 1))) == "x^6 + 2*x^3 + 1"
    assert str(Polynomial((-1, 0, 1))) == "x^2 - 1"
    assert str(Polynomial((0, -1))) == "-x"
    assert str(Polynomial((2, 5))) == "5*x + 2"


def test_serialization_round_trip():
    p = Polynomial((1, 0, -4, 7))
    strings = p.to_coeff_strings()
    assert strings == ["1", "0", "-4", "7"]
    assert Polynomial.from_coeff_strings(strings) == p
    assert ZERO.to_coeff_strings() == []
    assert Polynomial.from_coeff_strings([]) == ZERO


def test_big_coefficients_survive_strings():
    big = 10**40 + 7
    p = Polynomial((big, 1))
    assert Polynomial.from_coeff_strings(p.to_coeff_strings()) == p


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a
    assert a - a == ZERO


@given(polys, polys, points)
def test_evaluation_is_a_ring_hom(a, b, v):
    assert (a + b).evaluate(v) == a.evaluate(v) + b.evaluate(v)
    assert (a * b).evaluate(v) == a.evaluate(v) * b.evaluate(v)


@given(polys, st.integers(min_value=1, max_value=4), points)
def test_substitute_power_matches_evaluation(a, m, v):
    assert a.substitute_power(m).evaluate(v) == a.evaluate(v**m)


@given(polys, polys)
def test_operations_stay_canonical(a, b):
    for result in (a + b, a - b, a * b, -a, a.times_monomial(2, 3)):
        assert not result.coeffs or result.coeffs[-1] != 0
