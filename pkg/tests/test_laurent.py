import random
from fractions import Fraction

import pytest

from chowseries import LaurentPoly, NotInvertibleError, binomial, geometric_sum, s_power
from oracles import naive_eval_minus_one, naive_poly_add, naive_poly_mul, pascal


def rand_poly(rng, max_terms=8):
    return LaurentPoly({rng.randint(-6, 10): rng.randint(-9, 9) for _ in range(rng.randint(0, max_terms))})


def test_addition_examples():
    a = LaurentPoly({0: 1, 2: 1})
    b = LaurentPoly({2: 1, 4: 1})
    assert a + b == LaurentPoly({0: 1, 2: 2, 4: 1})
    assert a + LaurentPoly() == a
    assert a + (-a) == LaurentPoly()
    assert not (a - a)


def test_multiplication_examples():
    p1 = LaurentPoly({0: 1, 2: 1})
    assert p1 * p1 == LaurentPoly({0: 1, 2: 2, 4: 1})
    assert dict((p1 * p1).to_pairs()) == naive_poly_mul({0: 1, 2: 1}, {0: 1, 2: 1})
    assert p1 * LaurentPoly.term(1) == p1
    assert s_power(-2) * s_power(2) == LaurentPoly.term(1)


def test_eval_minus_one_examples():
    assert LaurentPoly({0: 1, 2: 1, 4: 1}).eval_minus_one() == 3
    assert LaurentPoly().eval_minus_one() == 0
    for n in (1, 2, 3, 7, 40):
        assert geometric_sum(n).eval_minus_one() == n
        assert geometric_sum(n).evaluate(1) == n


def test_geometric_sum_examples():
    assert geometric_sum(1) == LaurentPoly.term(1)
    assert geometric_sum(3) == LaurentPoly({0: 1, 2: 1, 4: 1})
    assert geometric_sum(6) == LaurentPoly({2 * i: 1 for i in range(6)})
    assert geometric_sum(6).support == (0, 2, 4, 6, 8, 10)
    with pytest.raises(ValueError):
        geometric_sum(0)
    with pytest.raises(ValueError):
        geometric_sum(-3)


def test_binomial_examples():
    assert binomial(4, 2) == 6
    for k in range(10):
        assert binomial(k, 0) == 1
    assert binomial(33, 3) == 5456
    assert binomial(33, 3) == pascal(33, 3)
    assert binomial(3, 5) == 0


def test_pascal_identity():
    for a in range(1, 61):
        for b in range(1, 61):
            assert binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b)


def test_ring_axioms_random():
    rng = random.Random(1234)
    for _ in range(300):
        a, b, c = rand_poly(rng), rand_poly(rng), rand_poly(rng)
        assert (a + b) + c == a + (b + c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert (a * b) * c == a * (b * c)


def test_mul_matches_naive_oracle():
    rng = random.Random(99)
    for _ in range(100):
        a, b = rand_poly(rng), rand_poly(rng)
        expected = naive_poly_mul(dict(a.to_pairs()), dict(b.to_pairs()))
        assert dict((a * b).to_pairs()) == expected
        assert dict((a + b).to_pairs()) == naive_poly_add(dict(a.to_pairs()), dict(b.to_pairs()))


def test_telescoping_identity():
    one_minus_s2 = LaurentPoly({0: 1, 2: -1})
    for n in range(1, 201):
        assert geometric_sum(n) * one_minus_s2 == LaurentPoly({0: 1, 2 * n: -1})


def test_eval_minus_one_is_ring_homomorphism():
    rng = random.Random(55)
    for _ in range(200):
        a, b = rand_poly(rng), rand_poly(rng)
        assert (a * b).eval_minus_one() == a.eval_minus_one() * b.eval_minus_one()
        assert (a + b).eval_minus_one() == a.eval_minus_one() + b.eval_minus_one()
        assert a.eval_minus_one() == naive_eval_minus_one(dict(a.to_pairs()))


def test_zero_pruning_and_equality():
    assert LaurentPoly({3: 0, 5: 0}) == LaurentPoly()
    assert LaurentPoly({1: 2, 2: -1}) == LaurentPoly([(2, -1), (1, 1), (1, 1)])
    assert LaurentPoly({0: Fraction(4, 2)}) == LaurentPoly({0: 2})
    assert hash(LaurentPoly({0: Fraction(4, 2)})) == hash(LaurentPoly({0: 2}))


def test_rejects_inexact_coefficients():
    with pytest.raises(TypeError):
        LaurentPoly({0: 0.5})
    with pytest.raises(TypeError):
        LaurentPoly({0.5: 1})


def test_shift_and_degrees():
    p = LaurentPoly({-2: 3, 4: 1})
    assert p.shift(2) == LaurentPoly({0: 3, 6: 1})
    assert p.min_degree == -2 and p.max_degree == 4
    assert LaurentPoly().min_degree is None


def test_evaluate_exact():
    p = LaurentPoly({-1: 1, 2: 3})
    assert p.evaluate(2) == Fraction(1, 2) + 12
    assert p.evaluate(Fraction(1, 3)) == 3 + Fraction(1, 3)
    with pytest.raises(ValueError):
        p.evaluate(0)
    assert LaurentPoly({0: 5, 3: 2}).evaluate(0) == 5


def test_invert_monomial():
    assert s_power(3).invert_monomial() == s_power(-3)
    assert LaurentPoly.term(2, 1).invert_monomial() == LaurentPoly({-1: Fraction(1, 2)})
    with pytest.raises(NotInvertibleError):
        LaurentPoly({0: 1, 2: -1}).invert_monomial()
    with pytest.raises(NotInvertibleError):
        LaurentPoly().invert_monomial()


def test_power_and_str():
    p = LaurentPoly({0: 1, 2: -1})
    assert p**0 == LaurentPoly.term(1)
    assert p**3 == p * p * p
    assert str(LaurentPoly()) == "0"
    assert str(LaurentPoly({0: 1, 2: 1})) == "1 + s^2"
    assert str(LaurentPoly({-2: -1, 1: 2})) == "-s^-2 + 2*s"
