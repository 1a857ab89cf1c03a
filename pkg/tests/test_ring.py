"""Ring axioms, quantum integers and cyclotomic specialization."""

import random
from fractions import Fraction

import pytest

from c2spider.ring import (
    CycNumber,
    DenominatorVanishes,
    LaurentPoly,
    OrderMismatch,
    RationalFunction,
    cyclotomic_poly,
    qint,
    specialize,
)

q = LaurentPoly.q_power


def rand_poly(rng, size=4, span=6):
    return LaurentPoly({rng.randint(-span, span): Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                        for _ in range(rng.randint(0, size))})


def test_qint_base_cases():
    assert qint(0).is_zero()
    assert qint(1) == LaurentPoly.one()
    # oracle: expand (q^3 - q^-3)/(q - q^-1) by exact polynomial division
    ratio = RationalFunction(q(3) - q(-3), q(1) - q(-1))
    assert ratio.is_poly()
    assert qint(3) == ratio.as_laurent()
    assert qint(3) == q(2) + LaurentPoly.one() + q(-2)
    assert qint(-4) == -qint(4)


def test_qint_product_identity():
    # classical [2]^2 = [1] + [3]
    assert qint(2) * qint(2) == qint(1) + qint(3)
    # and more generally [m][n] telescopes
    for m in range(1, 6):
        for n in range(m, 6):
            total = LaurentPoly.zero()
            for k in range(m):
                total = total + qint(n - m + 1 + 2 * k)
            assert qint(m) * qint(n) == total


def test_ring_axioms_random():
    rng = random.Random(20260810)
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert (a + b) + c == a + (b + c)
        assert a + b == b + a
        assert (a * b) * c == a * (b * c)
        assert a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a * LaurentPoly.one() == a
        assert (a + (-a)).is_zero()
        assert (a * LaurentPoly.zero()).is_zero()


def test_rational_function_canonical():
    # (q^2 - q^-2) / (q - q^-1) reduces to the polynomial [2]
    r = RationalFunction(q(2) - q(-2), q(1) - q(-1))
    assert r.is_poly()
    assert r.as_laurent() == qint(2)
    # denominator normalized with positive lowest coefficient
    r2 = RationalFunction(LaurentPoly.one(), -qint(2))
    assert r2.den.terms[r2.den.min_exp()] > 0
    assert r2 == RationalFunction(-LaurentPoly.one(), qint(2))


def test_rational_function_field_ops():
    rng = random.Random(7)
    for _ in range(60):
        a = RationalFunction(rand_poly(rng) + LaurentPoly.one(), qint(2))
        b = RationalFunction(qint(3), rand_poly(rng) + q(1))
        assert (a * b) / b == a
        assert a - a == RationalFunction.coerce(0)
        assert (a + b) * (a - b) == a * a - b * b


def test_cyclotomic_polys():
    assert list(cyclotomic_poly(1)) == [-1, 1]
    assert list(cyclotomic_poly(2)) == [1, 1]
    assert list(cyclotomic_poly(4)) == [1, 0, 1]
    assert list(cyclotomic_poly(8)) == [1, 0, 0, 0, 1]
    assert list(cyclotomic_poly(12)) == [1, 0, -1, 0, 1]


def test_specialize_root_of_unity_order():
    for n in (8, 12, 16):
        assert specialize(q(n), n) == CycNumber.one(n)
        assert specialize(q(1), n) ** n == CycNumber.one(n)


def test_specialize_quantum_integers():
    # [2] at a primitive 8th root: q + q^-1 != 0
    assert not specialize(qint(2), 8).is_zero()
    # [4] at order 8: q^4 - q^-4 = 0 since q^8 = 1
    assert specialize(qint(4), 8).is_zero()


def test_specialize_vanishing_sweep():
    # [n] dies at order N exactly when N | 2n.  Orders 1 and 2 are excluded:
    # there q - q^-1 = 0 as well and [n] specializes to +-n instead.
    for n in range(0, 51):
        for big_n in range(3, 61):
            vanishes = specialize(qint(n), big_n).is_zero()
            assert vanishes == ((2 * n) % big_n == 0), (n, big_n)


def test_specialize_is_ring_homomorphism():
    rng = random.Random(99)
    for big_n in (8, 16, 20):
        for _ in range(40):
            a, b, c = (rand_poly(rng) for _ in range(3))
            lhs = specialize(a * b + c, big_n)
            rhs = specialize(a, big_n) * specialize(b, big_n) + specialize(c, big_n)
            assert lhs == rhs


def test_specialize_denominator_vanishes():
    r = RationalFunction(LaurentPoly.one(), qint(4))
    with pytest.raises(DenominatorVanishes):
        specialize(r, 8)
    # away from the bad order the division goes through
    val = specialize(r, 20)
    assert val * specialize(qint(4), 20) == CycNumber.one(20)


def test_cyc_number_field_ops():
    x = specialize(qint(2), 16)
    assert x / x == CycNumber.one(16)
    assert (x * x.inverse()) == CycNumber.one(16)
    y = CycNumber.root_power(16, 5)
    assert y * y.conj() == CycNumber.one(16)
    with pytest.raises(OrderMismatch):
        x + CycNumber.one(8)


def test_cyc_number_json_roundtrip():
    x = specialize(qint(3) * qint(2), 20) / specialize(qint(2), 20)
    again = CycNumber.from_json(x.to_json())
    assert again == x


def test_laurent_json_roundtrip():
    p = qint(5) - 3 * q(-7)
    assert LaurentPoly.from_json(p.to_json()) == p
