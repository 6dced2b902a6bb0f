"""Sparse exact linear algebra: echelon bases, subspaces, kernels."""

import random

from qdiv.cyclotomic import field
from qdiv.linalg import (
    EchelonBasis,
    Subspace,
    identity_rows,
    kernel_basis,
    mat_equal,
    mat_is_zero,
    matmul_rows,
    trace_product,
    transpose_rows,
    vec_axpy,
)

F = field(3)


def dense(vec, dim):
    return [vec.get(j, F.from_fraction(0)) for j in range(dim)]


def test_echelon_rank_and_membership():
    ech = EchelonBasis(F)
    one = F.from_fraction(1)
    assert ech.insert({0: one, 1: one})
    assert ech.insert({1: one})
    assert not ech.insert({0: one})  # dependent on the first two
    assert ech.rank == 2
    assert ech.contains({0: F.from_fraction(5)})
    assert not ech.contains({2: one})


def test_echelon_canonical_rows_ignore_insertion_order():
    rng = random.Random(90210)
    vectors = []
    for _ in range(6):
        vectors.append({j: F.make((rng.randint(-4, 4), rng.randint(-4, 4)), 1)
                        for j in range(5) if rng.random() < 0.7})
    reference = None
    for _ in range(5):
        rng.shuffle(vectors)
        ech = EchelonBasis(F)
        for v in vectors:
            ech.insert(dict(v))
        rows = ech.canonical_rows()
        if reference is None:
            reference = rows
        assert rows == reference


def test_echelon_coords_reconstruct():
    one = F.from_fraction(1)
    z = F.zeta_power(1)
    ech = EchelonBasis(F)
    ech.insert({0: one, 2: z})
    ech.insert({1: one})
    target = {0: z, 1: one, 2: z * z}
    coords = ech.coords(dict(target))
    assert coords is not None
    rebuilt = {}
    for c, row in zip(coords, ech.rows):
        vec_axpy(rebuilt, c, row)
    assert rebuilt == {k: v for k, v in target.items() if v}


def test_subspace_equality_and_hash():
    one = F.from_fraction(1)
    a = Subspace.from_vectors(F, 3, [{0: one}, {1: one}])
    b = Subspace.from_vectors(F, 3, [{1: one * 2}, {0: one, 1: one}])
    c = Subspace.from_vectors(F, 3, [{0: one}])
    assert a == b
    assert hash(a) == hash(b)
    assert a != c
    assert c.is_subspace_of(a)
    assert not a.is_subspace_of(c)
    assert a.dim == 2 and c.dim == 1


def test_kernel_basis_annihilates_and_has_right_dim():
    one = F.from_fraction(1)
    # rank-1 matrix on 3 columns: kernel has dimension 2
    rows = [{0: one, 1: one, 2: one}, {0: one * 2, 1: one * 2, 2: one * 2}]
    ker = kernel_basis(rows, 3, F)
    assert len(ker) == 2
    for v in ker:
        for row in rows:
            total = F.from_fraction(0)
            for j, c in v.items():
                total = total + row.get(j, F.from_fraction(0)) * c
            assert not total


def test_matmul_identity_and_transpose():
    one = F.from_fraction(1)
    z = F.zeta_power(1)
    a = [{0: z, 1: one}, {1: z * z}]
    ident = identity_rows(2, F)
    assert mat_equal(matmul_rows(a, ident), a)
    assert mat_equal(matmul_rows(ident, a), a)
    att = transpose_rows(transpose_rows(a, 2), 2)
    assert mat_equal(att, a)
    assert mat_is_zero([{}, {}])


def test_trace_product_matches_dense_computation():
    rng = random.Random(414243)
    dim = 4
    a = [{j: F.make((rng.randint(-3, 3), rng.randint(-3, 3)), 1)
          for j in range(dim) if rng.random() < 0.6} for _ in range(dim)]
    b = [{j: F.make((rng.randint(-3, 3), rng.randint(-3, 3)), 1)
          for j in range(dim) if rng.random() < 0.6} for _ in range(dim)]
    prod = matmul_rows(a, b)
    expected = F.from_fraction(0)
    for i in range(dim):
        expected = expected + prod[i].get(i, F.from_fraction(0))
    assert trace_product(a, b, F) == expected
