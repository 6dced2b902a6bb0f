"""Quantum group action, submodule machinery, and certificates."""

import pytest

from qdiv.cyclotomic import RootSpec
from qdiv.dpalgebra import ModVector, Truncation
from qdiv.errors import NotClosedError
from qdiv.linalg import Subspace, mat_equal, mat_is_zero, matmul_rows
from qdiv.uqaction import (
    Generator,
    algebra_closure,
    apply_generator,
    commutant,
    component_action,
    component_space,
    direct_sum_action,
    generator_matrix,
    generators,
    indecomposability_certificate,
    radical_oracle,
    relations_report,
    restrict_action,
    simplicity_certificate,
    socle_oracle,
    submodule_closure,
)

ODD3 = RootSpec(3, "odd")
T31 = Truncation(3, 1)
T32 = Truncation(3, 2)

E1 = Generator("e", 1)
F1 = Generator("f", 1)
K1 = Generator("k", 1)


def test_generator_validation_and_order():
    gens = generators(3)
    assert len(gens) == 8
    assert str(gens[0]) == "e1"
    with pytest.raises(ValueError):
        Generator("x", 1)
    with pytest.raises(ValueError):
        Generator("e", 0)


def test_apply_generator_moves_one_box():
    # e_i shifts a box from axis i+1 to axis i, f_i the other way
    v = ModVector.monomial((0, 1, 0), ODD3)
    assert apply_generator(E1, v, ODD3) == ModVector.monomial((1, 0, 0), ODD3)
    w = ModVector.monomial((1, 0, 0), ODD3)
    assert apply_generator(F1, w, ODD3) == ModVector.monomial((0, 1, 0), ODD3)
    assert apply_generator(E1, w, ODD3).is_zero()
    # K_1 eigenvalue q^(a_1 - a_2)
    assert apply_generator(K1, w, ODD3) == w.scale(ODD3.q)


def test_apply_generator_respects_truncation():
    # the target exponent 3 exceeds the m=1 cap, and its coefficient [3] = 0
    v = ModVector.monomial((2, 1, 0), ODD3)
    assert apply_generator(E1, v, ODD3, T31).is_zero()
    assert apply_generator(E1, v, ODD3).is_zero()


def test_degree_one_matrices():
    comp = component_space(1, T31, ODD3)
    assert comp.basis == ((0, 0, 1), (0, 1, 0), (1, 0, 0))
    one = ODD3.one
    assert generator_matrix(E1, comp) == [{}, {}, {1: one}]
    assert generator_matrix(F1, comp) == [{}, {2: one}, {}]


def test_relations_hold_on_sample_components():
    for s in (1, 4):
        rep = relations_report(component_space(s, T32, ODD3))
        assert rep and all(rep.values())


def test_submodule_closure_frozen_dimension():
    comp = component_space(7, T32, ODD3)
    assert comp.dim == 27
    cl = submodule_closure([{comp.index_of[(5, 2, 0)]: ODD3.one}], comp)
    assert cl.dim == 6
    # closures are genuinely invariant
    sub_action, k = restrict_action(comp, cl)
    assert k == 6


def test_restrict_action_rejects_non_invariant_subspace():
    comp = component_space(7, T32, ODD3)
    random_line = Subspace.from_vectors(
        ODD3.field, comp.dim, [{0: ODD3.one, 5: ODD3.one}]
    )
    with pytest.raises(NotClosedError):
        restrict_action(comp, random_line)


def test_socle_and_radical_oracles():
    comp = component_space(7, T32, ODD3)
    soc = socle_oracle(comp)
    rad = radical_oracle(comp)
    assert soc.dim == 18
    assert rad.dim == 18
    assert rad.is_subspace_of(soc)  # here they coincide
    assert soc == rad


def test_socle_radical_series_shape():
    comp = component_space(7, T32, ODD3)
    soc_series = comp.socle_series()
    rad_series = comp.radical_series()
    assert [v.dim for v in soc_series] == [18, 27]
    assert [v.dim for v in rad_series] == [27, 18, 0]


def test_simplicity_certificates():
    comp1 = component_space(1, T31, ODD3)
    full = submodule_closure([{0: ODD3.one}], comp1)
    assert full.dim == comp1.dim
    assert simplicity_certificate(full, comp1).verdict == "Simple"

    comp7 = component_space(7, T32, ODD3)
    cl = submodule_closure([{comp7.index_of[(1, 3, 3)]: ODD3.one}], comp7)
    cert = simplicity_certificate(cl, comp7)
    assert cert.verdict == "NotSimple"
    assert cert.witness is not None


def test_indecomposability_certificate_and_control():
    comp = component_space(7, T32, ODD3)
    cert = indecomposability_certificate(comp)
    assert cert.verdict == "Indecomposable"
    assert "dim End = 1" in cert.detail

    action = component_action(comp)
    doubled, dim2 = direct_sum_action(action, comp.dim, action, comp.dim)
    control = indecomposability_certificate((doubled, dim2), spec=ODD3)
    assert control.verdict == "Decomposable"
    assert control.witness is not None


def test_commutant_of_an_indecomposable_component_is_scalars():
    comp = component_space(7, T32, ODD3)
    comm = commutant(component_action(comp), comp.dim, ODD3.field)
    assert len(comm) == 1
    action = component_action(comp)
    for basis_mat in comm:
        for g, rows in action.items():
            left = matmul_rows(basis_mat, rows)
            right = matmul_rows(rows, basis_mat)
            assert mat_equal(left, right)


def test_algebra_closure_on_a_simple_component_is_full_matrix_algebra():
    comp = component_space(1, T31, ODD3)
    alg = algebra_closure(component_action(comp), comp.dim, ODD3.field)
    assert len(alg) == comp.dim ** 2


def test_nilpotency_of_raising_and_lowering_matrices():
    comp = component_space(4, T32, ODD3)
    for g in (Generator("e", 1), Generator("f", 2)):
        rows = generator_matrix(g, comp)
        cube = matmul_rows(matmul_rows(rows, rows), rows)
        assert mat_is_zero(cube)
