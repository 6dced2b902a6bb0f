"""Divided power multiplication and truncated component bases."""

import random

import pytest

from qdiv.cyclotomic import RootSpec
from qdiv.dpalgebra import (
    ModVector,
    Truncation,
    bounded_compositions,
    component_basis,
    multiply,
    multiply_vectors,
    star,
    theta,
)
from qdiv.qarith import dim_by_gaussian

ODD3 = RootSpec(3, "odd")
EVEN3 = RootSpec(3, "even")


def test_star_counts_descending_cross_pairs():
    assert star((1, 0), (0, 1)) == 0
    assert star((0, 1), (1, 0)) == 1
    assert star((2, 3), (4, 5)) == 12
    assert star((0, 0), (7, 7)) == 0
    with pytest.raises(ValueError):
        star((1,), (1, 2))


def test_theta_gives_the_commutation_factor():
    # x2 x1 = q x1 x2 on the quantum plane
    assert theta((0, 1), (1, 0), ODD3) == ODD3.q
    assert theta((1, 0), (0, 1), ODD3) == ODD3.q_power(-1)
    for alpha, beta in (((1, 2), (2, 1)), ((0, 3), (1, 1))):
        lhs = multiply(alpha, beta, ODD3)
        rhs = multiply(beta, alpha, ODD3).scale(theta(alpha, beta, ODD3))
        assert lhs == rhs


def test_multiply_structure_constants():
    v = multiply((0, 1), (1, 0), ODD3)
    assert v == ModVector({(1, 1): ODD3.q})
    # binomial coefficient [3 choose 1] vanishes at a third root
    assert multiply((1,), (2,), ODD3).is_zero()
    assert multiply((2,), (3,), ODD3) == ModVector({(5,): ODD3.one})


def test_multiply_respects_truncation_cap():
    t = Truncation(1, 1)
    assert multiply((2,), (3,), ODD3, t).is_zero()
    assert multiply((1,), (1,), ODD3, t) == ModVector({(2,): ODD3.scalar(-1)})


def test_multiply_rejects_bad_input():
    with pytest.raises(ValueError):
        multiply((1, 0), (1,), ODD3)
    with pytest.raises(ValueError):
        multiply((-1,), (1,), ODD3)


def test_multiply_is_associative_on_random_monomials():
    rng = random.Random(77001)
    for spec in (ODD3, EVEN3):
        for _ in range(40):
            a, b, c = (
                tuple(rng.randint(0, 3) for _ in range(2)) for _ in range(3)
            )
            va = ModVector.monomial(a, spec)
            vb = ModVector.monomial(b, spec)
            vc = ModVector.monomial(c, spec)
            left = multiply_vectors(multiply_vectors(va, vb, spec), vc, spec)
            right = multiply_vectors(va, multiply_vectors(vb, vc, spec), spec)
            assert left == right


def test_unit_monomial_is_the_identity():
    one = ModVector.monomial((0, 0), ODD3)
    v = ModVector.monomial((2, 1), ODD3)
    assert multiply_vectors(one, v, ODD3) == v
    assert multiply_vectors(v, one, ODD3) == v


def test_bounded_compositions_order_and_cap():
    assert bounded_compositions(2, 3, None)[:4] == (
        (0, 0, 2),
        (0, 1, 1),
        (0, 2, 0),
        (1, 0, 1),
    )
    capped = bounded_compositions(3, 2, 2)
    assert capped == ((1, 2), (2, 1))
    assert bounded_compositions(-1, 2, None) == ()
    assert bounded_compositions(0, 2, None) == ((0, 0),)


def test_component_basis_matches_dimension_formula():
    for n in (2, 3):
        for m in (1, 2):
            t = Truncation(n, m)
            total = n * (m * 3 - 1)
            for s in range(0, total + 1):
                basis = component_basis(s, t, ODD3)
                assert len(basis) == dim_by_gaussian(n, 3 * m, s)
                assert list(basis) == sorted(basis)
                assert all(sum(alpha) == s for alpha in basis)


def test_component_basis_small_case():
    assert component_basis(2, Truncation(2, 1), ODD3) == ((0, 2), (1, 1), (2, 0))


def test_truncation_caps():
    assert Truncation(2, 1).cap(ODD3) == 2
    assert Truncation(2, 2).cap(EVEN3) == 5
    assert Truncation(2, 0).cap(ODD3) is None
    assert Truncation(3, 2).total_degree(ODD3) == 15
    assert Truncation(3, 0).total_degree(ODD3) is None
    with pytest.raises(ValueError):
        Truncation(0, 1)
    with pytest.raises(ValueError):
        Truncation(2, -1)


def test_mod_vector_arithmetic():
    v = ModVector.monomial((1, 0), ODD3)
    w = ModVector.monomial((0, 1), ODD3)
    assert (v + w) - v == w
    assert (v - v).is_zero()
    assert v.scale(ODD3.zero).is_zero()
    assert -(-v) == v
