"""Cyclotomic polynomial and exact field arithmetic checks."""

import random
from fractions import Fraction

import pytest

from qdiv.cyclotomic import CycScalar, CyclotomicField, RootSpec, cyclotomic_poly, field


def test_cyclotomic_poly_small_values():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)


def test_cyclotomic_poly_product_recovers_x_pow_n_minus_1():
    # prod over divisors d of n of Phi_d equals x^n - 1
    for n in (6, 10, 12, 30):
        prod = [1]
        for d in range(1, n + 1):
            if n % d:
                continue
            phi = cyclotomic_poly(d)
            out = [0] * (len(prod) + len(phi) - 1)
            for i, a in enumerate(prod):
                for j, b in enumerate(phi):
                    out[i + j] += a * b
            prod = out
        expected = [-1] + [0] * (n - 1) + [1]
        assert prod == expected


def test_cyclotomic_poly_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_poly(0)


def test_field_axioms_on_random_elements():
    rng = random.Random(20240817)
    for n in (3, 6, 5, 10):
        F = field(n)
        deg = len(cyclotomic_poly(n)) - 1

        def rand_scalar():
            nums = tuple(rng.randint(-9, 9) for _ in range(deg))
            return F.make(nums, rng.randint(1, 7))

        for _ in range(25):
            a, b, c = rand_scalar(), rand_scalar(), rand_scalar()
            assert a + b == b + a
            assert a * b == b * a
            assert (a + b) + c == a + (b + c)
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c
            assert a - a == F.from_fraction(0)
            if a:
                assert a * a.inverse() == F.from_fraction(1)


def test_zeta_is_a_primitive_root():
    for n in (3, 4, 6, 10):
        F = field(n)
        z = F.zeta_power(1)
        assert z ** n == F.from_fraction(1)
        for k in range(1, n):
            assert z ** k != F.from_fraction(1)


def test_scalar_power_and_division():
    F = field(6)
    z = F.zeta_power(1)
    assert z ** -1 == z ** 5
    assert (z ** 2) / z == z
    half = F.from_fraction(Fraction(1, 2))
    assert half + half == F.from_fraction(1)
    with pytest.raises(ZeroDivisionError):
        z / F.from_fraction(0)


def test_render_strings():
    F = field(3)
    assert F.make((1, -1), 2).render() == "1/2 - 1/2*z"
    assert (-F.zeta_power(1)).render() == "-z"
    assert F.from_fraction(5).render() == "5"
    assert F.from_fraction(0).render() == "0"
    assert F.zeta_power(2).render() == "-1 - z"


def test_rational_recognition():
    F = field(5)
    assert F.from_fraction(3).is_rational()
    assert F.from_fraction(3).as_fraction() == Fraction(3)
    assert not F.zeta_power(1).is_rational()
    with pytest.raises(ValueError):
        F.zeta_power(1).as_fraction()


def test_root_spec_orders():
    odd = RootSpec(3, "odd")
    even = RootSpec(3, "even")
    assert odd.N == 3
    assert even.N == 6
    assert odd.q_power(3) == odd.one
    assert even.q_power(3) == -even.one
    # q-power exponents only matter mod N
    for k in range(-7, 8):
        assert odd.q_power(k) == odd.q_power(k + odd.N)
        assert even.q_power(k) == even.q_power(k + even.N)


def test_root_spec_validation():
    with pytest.raises(ValueError):
        RootSpec(2, "odd")
    with pytest.raises(ValueError):
        RootSpec(4, "odd")
    with pytest.raises(ValueError):
        RootSpec(3, "primitive")
    # even order does accept even ell: q is then a primitive 2*ell-th root
    assert RootSpec(4, "even").N == 8


def test_scalar_coercion_with_ints_and_fractions():
    spec = RootSpec(5, "odd")
    z = spec.q
    assert 1 + z == z + 1
    assert 2 * z == z + z
    assert z - Fraction(1, 3) == -(Fraction(1, 3) - z)
    assert (z / 2) * 2 == z
