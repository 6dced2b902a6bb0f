"""Exact sparse linear algebra over a cyclotomic field.

Vectors are sparse dicts {column -> CycScalar}; matrices are lists of such
row dicts.  `EchelonBasis` maintains a fully reduced row echelon form
incrementally, which makes membership tests a single elimination pass and
gives every subspace one canonical basis (so subspace equality is tuple
equality).
"""

from __future__ import annotations

from .cyclotomic import CycScalar, CyclotomicField

Vec = dict[int, CycScalar]


def vec_axpy(u: Vec, c: CycScalar, v: Vec) -> None:
    """In-place u += c * v with zero pruning."""
    if not c:
        return
    for col, x in v.items():
        s = u.get(col)
        s = c * x if s is None else s + c * x
        if s:
            u[col] = s
        elif col in u:
            del u[col]


def vec_scale(v: Vec, c: CycScalar) -> Vec:
    if not c:
        return {}
    return {col: c * x for col, x in v.items()}


class EchelonBasis:
    """Incrementally maintained reduced row echelon basis of a span."""

    __slots__ = ("field", "rows", "pivots", "_by_pivot")

    def __init__(self, field: CyclotomicField):
        self.field = field
        self.rows: list[Vec] = []
        self.pivots: list[int] = []
        self._by_pivot: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Vec) -> Vec:
        """Residual of vec after eliminating all pivot columns (vec unchanged)."""
        work = dict(vec)
        hits = [col for col in work if col in self._by_pivot]
        hits.sort()
        for col in hits:
            c = work.get(col)
            if c:
                vec_axpy(work, -c, self.rows[self._by_pivot[col]])
        return work

    def insert(self, vec: Vec) -> bool:
        """Add vec to the span; returns True if the rank grew."""
        res = self.reduce(vec)
        if not res:
            return False
        pivot = min(res)
        inv = res[pivot].inverse()
        row = vec_scale(res, inv)
        row[pivot] = self.field.one
        for other in self.rows:
            c = other.get(pivot)
            if c:
                vec_axpy(other, -c, row)
        self._by_pivot[pivot] = len(self.rows)
        self.rows.append(row)
        self.pivots.append(pivot)
        return True

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def coords(self, vec: Vec) -> list[CycScalar] | None:
        """Coefficients of vec in this row basis, or None if not in the span."""
        if not self.contains(vec):
            return None
        zero = self.field.zero
        return [vec.get(p, zero) for p in self.pivots]

    def canonical_rows(self) -> tuple[tuple[tuple[int, CycScalar], ...], ...]:
        order = sorted(range(len(self.rows)), key=lambda i: self.pivots[i])
        return tuple(
            tuple(sorted(self.rows[i].items(), key=lambda kv: kv[0])) for i in order
        )


class Subspace:
    """A subspace of a fixed coordinate space, held in canonical echelon form."""

    __slots__ = ("field", "ambient_dim", "rows", "pivots", "_ech")

    def __init__(self, field: CyclotomicField, ambient_dim: int, echelon: EchelonBasis):
        self.field = field
        self.ambient_dim = ambient_dim
        self.rows = echelon.canonical_rows()
        self.pivots = tuple(sorted(echelon.pivots))
        self._ech: EchelonBasis | None = None

    @classmethod
    def from_vectors(
        cls, field: CyclotomicField, ambient_dim: int, vectors
    ) -> "Subspace":
        ech = EchelonBasis(field)
        for v in vectors:
            ech.insert(v)
        return cls(field, ambient_dim, ech)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> list[Vec]:
        return [dict(row) for row in self.rows]

    def _echelon(self) -> EchelonBasis:
        if self._ech is None:
            ech = EchelonBasis(self.field)
            for row in self.rows:
                ech.insert(dict(row))
            self._ech = ech
        return self._ech

    def contains(self, vec: Vec) -> bool:
        return self._echelon().contains(vec)

    def coords(self, vec: Vec) -> list[CycScalar] | None:
        """Coefficients of vec in this basis (rows in pivot order), or None."""
        ech = self._echelon()
        return ech.coords(vec)

    def is_subspace_of(self, other: "Subspace") -> bool:
        if self.ambient_dim != other.ambient_dim:
            return False
        ech = other._echelon()
        return all(ech.contains(dict(row)) for row in self.rows)

    def __eq__(self, other):
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.pivots == other.pivots
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.pivots, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient_dim})"


def kernel_basis(rows: list[Vec], ncols: int, field: CyclotomicField) -> list[Vec]:
    """Canonical basis of {x : row . x = 0 for every row}, free columns ascending."""
    ech = EchelonBasis(field)
    for r in rows:
        ech.insert(r)
    pivot_set = set(ech.pivots)
    by_pivot = {p: ech.rows[i] for i, p in enumerate(ech.pivots)}
    out: list[Vec] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v: Vec = {free: field.one}
        for p in ech.pivots:
            c = by_pivot[p].get(free)
            if c:
                v[p] = -c
        out.append(v)
    return out


def matmul_rows(a: list[Vec], b: list[Vec]) -> list[Vec]:
    """Product of row-major sparse matrices (C[i] = sum_k A[i][k] * B-row-k)."""
    out: list[Vec] = []
    for arow in a:
        crow: Vec = {}
        for k, c in arow.items():
            vec_axpy(crow, c, b[k])
        out.append(crow)
    return out


def identity_rows(dim: int, field: CyclotomicField) -> list[Vec]:
    return [{i: field.one} for i in range(dim)]


def transpose_rows(a: list[Vec], dim: int) -> list[Vec]:
    out: list[Vec] = [{} for _ in range(dim)]
    for i, row in enumerate(a):
        for j, c in row.items():
            out[j][i] = c
    return out


def trace_product(a: list[Vec], b: list[Vec], field: CyclotomicField) -> CycScalar:
    """trace(A @ B) without forming the product."""
    acc = field.zero
    for i, row in enumerate(a):
        for j, c in row.items():
            x = b[j].get(i)
            if x:
                acc = acc + c * x
    return acc


def flatten_matrix(rows: list[Vec], dim: int) -> Vec:
    """Row-major flattening of a dim x dim sparse matrix to a vector."""
    out: Vec = {}
    for i, row in enumerate(rows):
        base = i * dim
        for j, c in row.items():
            out[base + j] = c
    return out


def unflatten_matrix(vec: Vec, dim: int) -> list[Vec]:
    rows: list[Vec] = [{} for _ in range(dim)]
    for flat, c in vec.items():
        rows[flat // dim][flat % dim] = c
    return rows


def mat_equal(a: list[Vec], b: list[Vec]) -> bool:
    if len(a) != len(b):
        return False
    for ra, rb in zip(a, b):
        if len(ra) != len(rb):
            return False
        for j, c in ra.items():
            if rb.get(j) != c:
                return False
    return True


def mat_is_zero(a: list[Vec]) -> bool:
    return all(not row for row in a)
