import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from charvar.errors import GenericNotEvaluable, VariableCountMismatch
from charvar.laurent import (GENERIC, Character, LaurentPolynomial,
                             poly_arithmetic, pullback_character)


def t(i, nvars=2, power=1):
    return LaurentPolynomial.variable(i, nvars, power)


def const(c, nvars=2):
    return LaurentPolynomial.constant(nvars, c)


def test_difference_of_squares():
    one = LaurentPolynomial.one(1)
    x = LaurentPolynomial.variable(0, 1)
    assert (x - one) * (x + one) == x * x - one


def test_additive_identity():
    p = t(0) * t(1, power=-1) - const(3)
    assert poly_arithmetic(p, LaurentPolynomial.zero(2), "add") == p


def test_unit_inverse_multiplies_to_one():
    x = LaurentPolynomial.variable(0, 1)
    xinv = LaurentPolynomial.variable(0, 1, power=-1)
    assert (x * xinv).is_one()


def test_variable_count_mismatch():
    with pytest.raises(VariableCountMismatch):
        poly_arithmetic(t(0, nvars=2), LaurentPolynomial.one(3), "mul")


def test_evaluate_examples():
    p = t(0) * t(1, power=-1) - const(1)
    assert p.evaluate(Character((2, Fraction(1, 2)))) == 3
    # any polynomial at the all-ones character sums its coefficients
    q = const(5) + t(0, power=-2) * t(1).scale(7)
    assert q.evaluate(Character.trivial(2)) == 12
    x = LaurentPolynomial.variable(0, 1)
    assert (x - LaurentPolynomial.one(1)).evaluate(Character((1,))) == 0


def test_generic_not_evaluable():
    with pytest.raises(GenericNotEvaluable):
        t(0).evaluate(GENERIC)


def test_character_rejects_zero_coordinate():
    with pytest.raises(ValueError):
        Character((1, 0))


def test_canonical_text_form():
    p = LaurentPolynomial(2, {(2, -1): Fraction(3), (0, 0): Fraction(-1)})
    assert p.to_text() == "3*t1^2*t2^-1 - 1"
    assert LaurentPolynomial.zero(2).to_text() == "0"
    assert const(1).to_text() == "1"
    x = LaurentPolynomial.variable(0, 1)
    assert (x - LaurentPolynomial.one(1)).to_text() == "t1 - 1"
    assert (LaurentPolynomial.one(1) - x).to_text() == "-t1 + 1"


def test_unit_normal():
    p = LaurentPolynomial(1, {(3,): Fraction(-2), (1,): Fraction(2)})
    n = p.unit_normal()
    assert n.to_text() == "t1^2 - 1"
    assert p.monic_univariate().to_text() == "t1^2 - 1"


simple_polys = st.builds(
    lambda terms: LaurentPolynomial(2, {e: Fraction(c) for e, c in terms}),
    st.lists(st.tuples(
        st.tuples(st.integers(-3, 3), st.integers(-3, 3)),
        st.integers(-4, 4)), max_size=6))


@given(simple_polys, simple_polys, simple_polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) * r == p * r + q * r
    assert (p - p).is_zero()


def test_mul_degree_span_bound():
    rng = random.Random(3)
    for _ in range(200):
        p = _random_poly(rng)
        q = _random_poly(rng)
        prod = p * q
        if prod.is_zero():
            continue
        for v in range(2):
            assert prod.degree_span(v) <= p.degree_span(v) + q.degree_span(v)


def _random_poly(rng):
    terms = {}
    for _ in range(rng.randint(1, 4)):
        e = (rng.randint(-3, 3), rng.randint(-3, 3))
        terms[e] = Fraction(rng.randint(-5, 5))
    return LaurentPolynomial(2, terms)


def test_exact_divide():
    x = LaurentPolynomial.variable(0, 1)
    one = LaurentPolynomial.one(1)
    f = (x - one) * (x + one)
    assert f.exact_divide(x - one) == x + one
    assert f.exact_divide(x.scale(2)) == (x - one) * (x + one) * \
        LaurentPolynomial(1, {(-1,): Fraction(1, 2)})
    assert (x - one).exact_divide(x + one) is None


def test_exact_divide_random_products():
    rng = random.Random(17)
    for _ in range(150):
        p = _random_poly(rng)
        q = _random_poly(rng)
        if p.is_zero() or q.is_zero():
            continue
        prod = p * q
        got = prod.exact_divide(q)
        assert got == p


def test_substitute_exponents_is_ring_map():
    rng = random.Random(9)
    mat = [[1, 1]]  # both variables to the same new variable
    for _ in range(100):
        p = _random_poly(rng)
        q = _random_poly(rng)
        assert (p * q).substitute_exponents(mat) == \
            p.substitute_exponents(mat) * q.substitute_exponents(mat)
        assert (p + q).substitute_exponents(mat) == \
            p.substitute_exponents(mat) + q.substitute_exponents(mat)


def test_pullback_character_matches_substitution():
    rng = random.Random(31)
    nubar = [[1, -2], [0, 3]]
    rho = Character((2, Fraction(3, 2)))
    pulled = pullback_character(nubar, rho, 2)
    for _ in range(50):
        p = _random_poly(rng)
        assert p.evaluate(pulled) == p.substitute_exponents(nubar).evaluate(rho)
