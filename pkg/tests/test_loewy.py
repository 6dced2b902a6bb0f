"""Energy filtration, socle identification, rigidity, reachability."""

import pytest

from qdiv.cyclotomic import RootSpec
from qdiv.dpalgebra import ModVector, Truncation, component_basis
from qdiv.errors import ZeroVectorError
from qdiv.linalg import mat_is_zero, matmul_rows
from qdiv.loewy import (
    EnergyProfile,
    e_bounds,
    e_bounds_bruteforce,
    e_bounds_closed_form,
    edeg,
    edeg_vector,
    identity_check,
    layer_action,
    layer_generators,
    loewy_filtration,
    reachability_tests,
    rigidity_check,
    socle_basis,
    socle_generators,
    staircase,
)
from qdiv.uqaction import algebra_closure, component_space, socle_oracle, submodule_closure

ODD3 = RootSpec(3, "odd")
T32 = Truncation(3, 2)


def test_edeg_splits_exponents_by_ell():
    p = edeg((3, 3, 1), ODD3)
    assert p.per_axis == (1, 1, 0)
    assert p.residue == (0, 0, 1)
    assert p.total == 2
    p2 = edeg((5, 2, 0), ODD3)
    assert p2.per_axis == (1, 0, 0)
    assert p2.residue == (2, 2, 0)
    assert p2.total == 1


def test_energy_profile_domination():
    a = edeg((5, 2, 0), ODD3)
    b = edeg((2, 2, 3), ODD3)
    assert not a.dominates(b) and not b.dominates(a)
    c = edeg((5, 5, 3), ODD3)
    assert c.dominates(a)


def test_edeg_vector_takes_the_maximum_total():
    v = ModVector.monomial((5, 2, 0), ODD3) + ModVector.monomial((3, 3, 1), ODD3)
    assert edeg_vector(v, ODD3) == 2
    with pytest.raises(ZeroVectorError):
        edeg_vector(ModVector.zero(), ODD3)


def test_e_bounds_frozen_values():
    assert e_bounds(2, T32, ODD3) == (0, 0)
    assert e_bounds(5, T32, ODD3) == (0, 1)
    assert e_bounds(7, T32, ODD3) == (1, 2)
    assert e_bounds(15, T32, ODD3) == (3, 3)


def test_e_bounds_match_bruteforce_everywhere():
    for n in (2, 3):
        for ell in (3, 5):
            spec = RootSpec(ell, "odd")
            t = Truncation(n, 2)
            for s in range(0, n * (2 * ell - 1) + 1):
                assert e_bounds(s, t, spec) == e_bounds_bruteforce(s, t, spec)


def test_e_bounds_closed_form_cases():
    # each case either pins the value or brackets it
    for s in range(0, 16):
        lo, hi = e_bounds(s, T32, ODD3)
        cf = e_bounds_closed_form(s, T32, ODD3)
        assert cf.e_min == lo
        assert cf.e_lo <= hi <= cf.e_hi
        if cf.case in (1, 2, 4):
            assert cf.e_lo == cf.e_hi == hi


def test_e_bounds_rejects_bad_degree_and_truncation():
    with pytest.raises(ValueError):
        e_bounds(16, T32, ODD3)
    with pytest.raises(ValueError):
        e_bounds(-1, T32, ODD3)
    with pytest.raises(ValueError):
        e_bounds(1, Truncation(3, 1), ODD3)


def test_staircase_shapes():
    assert staircase(0, 3, 3) == (0, 0, 0)
    assert staircase(1, 3, 3) == (1, 0, 0)
    assert staircase(4, 3, 3) == (2, 2, 0)
    assert staircase(5, 3, 3) == (2, 2, 1)
    assert staircase(6, 3, 3) == (2, 2, 2)
    with pytest.raises(ValueError):
        staircase(7, 3, 3)


def test_socle_generators_frozen_at_degree_seven():
    assert socle_generators(7, T32, ODD3) == ((2, 2, 3), (2, 5, 0), (5, 2, 0))
    assert len(socle_basis(7, T32, ODD3)) == 18


def test_minimal_energy_span_equals_socle_oracle():
    comp = component_space(7, T32, ODD3)
    soc = socle_oracle(comp)
    min_rows = [
        {comp.index_of[alpha]: ODD3.one} for alpha in socle_basis(7, T32, ODD3)
    ]
    from qdiv.linalg import Subspace

    span = Subspace.from_vectors(ODD3.field, comp.dim, min_rows)
    assert span == soc


def test_loewy_filtration_frozen_at_degree_seven():
    rep = loewy_filtration(7, T32, ODD3)
    assert (rep.e_min, rep.e_max) == (1, 2)
    assert rep.loewy_length == 2
    assert rep.total_dim == 27
    assert rep.cumulative_dims == (18, 27)
    bottom, top = rep.layers
    assert (bottom.energy, bottom.monomial_count) == (1, 18)
    assert (bottom.multiplicity, bottom.simple_dim) == (3, 6)
    assert bottom.generators == ((2, 2, 3), (2, 5, 0), (5, 2, 0))
    assert (top.energy, top.monomial_count) == (2, 9)
    assert (top.multiplicity, top.simple_dim) == (3, 3)
    assert top.generators == ((1, 3, 3), (4, 0, 3), (4, 3, 0))


def test_loewy_filtration_verifies_all_degrees():
    # the verify pass raises on any broken invariant, so survival is the test
    for s in range(0, 16):
        rep = loewy_filtration(s, T32, ODD3)
        assert rep.cumulative_dims[-1] == rep.total_dim
        assert sum(L.monomial_count for L in rep.layers) == rep.total_dim
        for L in rep.layers:
            assert L.monomial_count == L.multiplicity * L.simple_dim


def test_layer_generators_have_the_layer_energy():
    for s in (5, 7, 10):
        lo, hi = e_bounds(s, T32, ODD3)
        for e in range(lo, hi + 1):
            for alpha in layer_generators(s, e, T32, ODD3):
                assert sum(alpha) == s
                assert edeg(alpha, ODD3).total == e


def test_identity_check_balances():
    rep = identity_check(7, T32, ODD3)
    assert rep.total_dim == 27
    assert rep.terms == ((1, 3, 6), (2, 3, 3))
    assert rep.layer_sum == rep.total_dim
    for s in range(0, 16):
        r = identity_check(s, T32, ODD3)
        assert r.layer_sum == r.total_dim


def test_rigidity_frozen_at_degree_seven():
    rep = rigidity_check(7, T32, ODD3)
    assert rep.ok
    assert rep.loewy_length == 2
    assert rep.filtration_dims == (18, 27)
    assert rep.socle_dims == (18, 27)
    assert rep.radical_dims == (27, 18, 0)


def test_reachability_frozen_counts():
    rep = reachability_tests(7, T32, ODD3)
    assert rep.equal_profile_pairs == 54
    assert rep.dominated_pairs == 108
    assert rep.incomparable_pairs == 135
    assert rep.checked_pairs == 297


def test_layer_action_is_semisimple_with_one_simple_block():
    # three copies of one 6-dimensional simple: the image algebra is M_6
    action, monomials = layer_action(7, T32, ODD3, 1)
    assert len(monomials) == 18
    alg = algebra_closure(action, len(monomials), ODD3.field)
    assert len(alg) == 36
    # raising operators cube to zero layerwise too
    for g, rows in action.items():
        if g.kind in ("e", "f"):
            assert mat_is_zero(matmul_rows(matmul_rows(rows, rows), rows))


def test_generators_never_raise_energy():
    comp = component_space(10, T32, ODD3)
    for g in comp.gens:
        for j, alpha in enumerate(comp.basis):
            hit = comp.one_term(g, j)
            if hit is None:
                continue
            target, _ = hit
            assert (
                edeg(comp.basis[target], ODD3).total <= edeg(alpha, ODD3).total
            )


def test_closure_of_any_monomial_respects_profile_order():
    comp = component_space(4, T32, ODD3)
    for j, alpha in enumerate(comp.basis):
        cl = submodule_closure([{j: ODD3.one}], comp)
        pa = edeg(alpha, ODD3)
        for k, beta in enumerate(comp.basis):
            if cl.contains({k: ODD3.one}):
                assert pa.dominates(edeg(beta, ODD3))
