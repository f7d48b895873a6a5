import random
from fractions import Fraction

import pytest

from charvar.errors import TooManyMinors
from charvar.laurent import GENERIC, Character, LaurentPolynomial
from charvar.lmatrix import (LaurentMatrix, generic_rank, minors, rank_at,
                             smith_univariate, univariate_divmod)


def x(power=1):
    return LaurentPolynomial.variable(0, 1, power)


def one1():
    return LaurentPolynomial.one(1)


def torus_alexander():
    one = LaurentPolynomial.one(2)
    t1 = LaurentPolynomial.variable(0, 2)
    t2 = LaurentPolynomial.variable(1, 2)
    return LaurentMatrix.from_rows(2, [[one - t2, t1 - one]])


def test_rank_at_examples():
    m = LaurentMatrix.from_rows(1, [[x() - one1()]])
    assert rank_at(m, GENERIC) == 1
    assert rank_at(m, Character((1,))) == 0

    assert rank_at(torus_alexander(), GENERIC) == 1

    z = LaurentMatrix.zeros(2, 2, 3)
    assert rank_at(z, GENERIC) == 0
    assert rank_at(z, Character((2, 3))) == 0


def test_semicontinuity_and_generic_attainment():
    rng = random.Random(41)
    hits = 0
    total = 0
    for _ in range(120):
        m = _random_matrix(rng, nvars=2)
        g = rank_at(m, GENERIC)
        rho = Character((rng.choice([x for x in range(-9, 10) if x]),
                         rng.choice([x for x in range(-9, 10) if x])))
        r = rank_at(m, rho)
        assert r <= g
        total += 1
        hits += r == g
    # equality holds off a proper closed set, so nearly always in a big box
    assert hits / total > 0.9


def test_generic_rank_cross_checked_by_minors():
    rng = random.Random(13)
    for _ in range(80):
        m = _random_matrix(rng, nvars=2, max_dim=3)
        g = generic_rank(m)
        largest = 0
        for k in range(1, min(m.rows, m.cols) + 1):
            if any(not d.is_zero() for d in minors(m, k)):
                largest = k
        assert g == largest


def _random_matrix(rng, nvars, max_dim=4):
    rows = rng.randint(1, max_dim)
    cols = rng.randint(1, max_dim)
    ents = []
    for _ in range(rows):
        row = []
        for _ in range(cols):
            terms = {}
            for _ in range(rng.randint(0, 2)):
                e = tuple(rng.randint(-2, 2) for _ in range(nvars))
                terms[e] = Fraction(rng.randint(-3, 3))
            row.append(LaurentPolynomial(nvars, terms))
        ents.append(row)
    return LaurentMatrix.from_rows(nvars, ents)


def test_minors_examples():
    alex = torus_alexander()
    texts = sorted(p.to_text() for p in minors(alex, 1))
    assert texts == ["-t2 + 1", "t1 - 1"]

    t = LaurentPolynomial.variable(0, 1)
    z = LaurentPolynomial.zero(1)
    diag = LaurentMatrix.from_rows(1, [[t, z], [z, t]])
    (m2,) = minors(diag, 2)
    assert m2 == t * t

    assert [p.to_text() for p in minors(diag, 0)] == ["1"]


def test_minors_shape_and_ceiling():
    m = LaurentMatrix.zeros(1, 4, 4)
    with pytest.raises(ValueError):
        minors(m, 5)
    big = LaurentMatrix.zeros(1, 10, 10)
    with pytest.raises(TooManyMinors):
        minors(big, 5, ceiling=10)


def test_univariate_divmod():
    f = (x() - one1()) * (x() + one1()) * x(3)
    q, r = univariate_divmod(f, x() - one1())
    assert r.is_zero()
    assert q == (x() + one1()) * x(3)
    g = x(2) - x() - one1()
    d = x() - one1().scale(3)
    q, r = univariate_divmod(g, d)
    assert q * d + r == g
    assert r.is_zero() or r.degree_span(0) < d.degree_span(0)


def test_smith_univariate_single_entry():
    m = LaurentMatrix.from_rows(1, [[x() - one1()]])
    s = smith_univariate(m)
    assert [f.to_text() for f in s.invariant_factors] == ["t1 - 1"]
    assert s.free_rank == 0
    assert s.torsion_dimension == 1


def test_smith_univariate_zero_matrix():
    m = LaurentMatrix.zeros(1, 1, 2)
    s = smith_univariate(m)
    assert s.invariant_factors == ()
    assert s.free_rank == 2


def test_smith_univariate_gcd_row():
    # gcd(t - 1, t^2 - 1) = t - 1 by one Euclidean step
    m = LaurentMatrix.from_rows(1, [[x() - one1(), x(2) - one1()]])
    s = smith_univariate(m)
    assert [f.to_text() for f in s.invariant_factors] == ["t1 - 1"]
    assert s.torsion_dimension == 1
    assert s.free_rank == 1


def test_smith_transforms_reconstruct_input():
    rng = random.Random(29)
    for _ in range(60):
        m = _random_matrix(rng, nvars=1, max_dim=4)
        s = smith_univariate(m)
        assert (s.u @ m) @ s.v == s.diagonal
        assert (s.uinv @ s.diagonal) @ s.vinv == m
        # divisibility chain
        fs = s.invariant_factors
        for i in range(len(fs) - 1):
            q, r = univariate_divmod(fs[i + 1], fs[i])
            assert r.is_zero()
        # normalization: monic with nonzero constant term
        for f in fs:
            lo, _ = f.exponent_range(0)
            assert lo == 0
            assert f.leading()[1] == 1
        assert s.rank == generic_rank(m)


def test_smith_product_of_factors_matches_minor_gcd():
    rng = random.Random(37)
    for _ in range(40):
        m = _random_matrix(rng, nvars=1, max_dim=3)
        s = smith_univariate(m)
        k = s.rank
        if k == 0:
            continue
        product = LaurentPolynomial.one(1)
        for f in s.invariant_factors:
            product = product * f
        gcd = LaurentPolynomial.zero(1)
        for d in minors(m, k):
            gcd = _poly_gcd(gcd, d)
        assert gcd.monic_univariate() == product.monic_univariate()


def _poly_gcd(a, b):
    while not b.is_zero():
        _, r = univariate_divmod(a, b)
        a, b = b, r
    return a
