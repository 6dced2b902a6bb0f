"""The restricted quantum group u_q(sl_n) acting on divided power components.

Chevalley generators act on monomials by

    e_i . x^(beta) = [beta_i + 1]     x^(beta + e_i - e_(i+1))
    f_i . x^(beta) = [beta_(i+1) + 1] x^(beta - e_i + e_(i+1))
    K_i . x^(beta) = q^(beta_i - beta_(i+1)) x^(beta)

with terms dropped when a target coordinate would go negative.  In a
truncation the coefficient of any over-cap target vanishes identically, which
`apply_generator` asserts.  On top of the action this module provides the
exact oracles used by the structure theory: image algebra closure, trace-form
radical, socle/radical series, commutants, and simplicity/indecomposability
certificates.
"""

from __future__ import annotations

import dataclasses
import functools

from .cyclotomic import CycScalar, CyclotomicField, RootSpec
from .dpalgebra import ModVector, MultiIndex, Truncation, component_basis
from .errors import (
    AxisOutOfRangeError,
    InvariantViolationError,
    NotClosedError,
)
from .linalg import (
    EchelonBasis,
    Subspace,
    Vec,
    flatten_matrix,
    identity_rows,
    kernel_basis,
    mat_equal,
    mat_is_zero,
    matmul_rows,
    trace_product,
    transpose_rows,
    vec_axpy,
    vec_scale,
)
from .qarith import q_int

GENERATOR_KINDS = ("e", "f", "k", "kinv")


@dataclasses.dataclass(frozen=True)
class Generator:
    """A Chevalley generator e_i, f_i, K_i or K_i^-1 (i is 1-based)."""

    kind: str
    i: int

    def __post_init__(self):
        if self.kind not in GENERATOR_KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.i < 1:
            raise AxisOutOfRangeError("generator index must be >= 1")

    def __str__(self):
        return f"{self.kind}{self.i}"


def generators(n: int) -> tuple[Generator, ...]:
    """All 4*(n-1) generators in a fixed deterministic order."""
    out = []
    for kind in GENERATOR_KINDS:
        for i in range(1, n):
            out.append(Generator(kind, i))
    return tuple(out)


def _one_term(g: Generator, beta: MultiIndex, spec: RootSpec, cap: int | None):
    """(target index, coefficient) of g . x^(beta), or None if the term is zero."""
    i = g.i
    if i > len(beta) - 1:
        raise AxisOutOfRangeError(f"generator index {i} outside 1..{len(beta) - 1}")
    bi, bnext = beta[i - 1], beta[i]
    if g.kind == "k":
        return beta, spec.q_power(bi - bnext)
    if g.kind == "kinv":
        return beta, spec.q_power(bnext - bi)
    if g.kind == "e":
        if bnext == 0:
            return None
        coeff = q_int(bi + 1, spec)
        target = beta[: i - 1] + (bi + 1, bnext - 1) + beta[i + 1 :]
    else:  # "f"
        if bi == 0:
            return None
        coeff = q_int(bnext + 1, spec)
        target = beta[: i - 1] + (bi - 1, bnext + 1) + beta[i + 1 :]
    if cap is not None and max(target) > cap:
        if coeff:
            raise InvariantViolationError(
                f"{g} pushed {beta} over the cap with nonzero coefficient"
            )
        return None
    if not coeff:
        return None
    return target, coeff


def apply_generator(
    g: Generator, v: ModVector, spec: RootSpec, trunc: Truncation | None = None
) -> ModVector:
    """Apply one generator to a sparse vector of monomials."""
    cap = None if trunc is None else trunc.cap(spec)
    out: dict[MultiIndex, CycScalar] = {}
    for beta, c in v.terms.items():
        hit = _one_term(g, beta, spec, cap)
        if hit is None:
            continue
        target, coeff = hit
        s = out.get(target)
        s = c * coeff if s is None else s + c * coeff
        if s:
            out[target] = s
        elif target in out:
            del out[target]
    return ModVector(out)


class ComponentSpace:
    """The degree-s component of a truncation, with its action tabulated.

    Immutable after construction: the monomial basis (ascending lexicographic),
    an index lookup, per-generator one-term column maps, and K-eigenvalue
    signatures.  Structure data (image algebra, radical, series) is computed
    lazily and memoized.
    """

    def __init__(self, s: int, trunc: Truncation, spec: RootSpec):
        self.s = s
        self.trunc = trunc
        self.spec = spec
        self.basis = component_basis(s, trunc, spec)
        self.dim = len(self.basis)
        self.index_of = {beta: j for j, beta in enumerate(self.basis)}
        cap = trunc.cap(spec)
        self.gens = generators(trunc.n)
        self._colmap: dict[Generator, tuple] = {}
        for g in self.gens:
            col = []
            for beta in self.basis:
                hit = _one_term(g, beta, spec, cap)
                if hit is None:
                    col.append(None)
                else:
                    target, coeff = hit
                    col.append((self.index_of[target], coeff))
            self._colmap[g] = tuple(col)
        N = spec.N
        self.weight_sigs = tuple(
            tuple((beta[i] - beta[i + 1]) % N for i in range(trunc.n - 1))
            for beta in self.basis
        )
        self._cache: dict[str, object] = {}

    # -- coordinates ------------------------------------------------------

    def coords(self, v: ModVector) -> Vec:
        out: Vec = {}
        for beta, c in v.terms.items():
            j = self.index_of.get(beta)
            if j is None:
                raise ValueError(f"monomial {beta} is not in this component")
            out[j] = c
        return out

    def vector(self, coords: Vec) -> ModVector:
        return ModVector({self.basis[j]: c for j, c in coords.items() if c})

    # -- action -----------------------------------------------------------

    def apply(self, g: Generator, vec: Vec) -> Vec:
        out: Vec = {}
        colmap = self._colmap[g]
        for j, c in vec.items():
            hit = colmap[j]
            if hit is None:
                continue
            t, coeff = hit
            s = out.get(t)
            s = c * coeff if s is None else s + c * coeff
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return out

    def one_term(self, g: Generator, j: int):
        """(target row, coefficient) of g on basis monomial j, or None if zero."""
        return self._colmap[g][j]

    def matrix(self, g: Generator) -> list[Vec]:
        """Row-major sparse matrix of g on the monomial basis."""
        rows: list[Vec] = [{} for _ in range(self.dim)]
        for j, hit in enumerate(self._colmap[g]):
            if hit is not None:
                t, coeff = hit
                rows[t][j] = coeff
        return rows

    def gen_times(self, g: Generator, rows: list[Vec]) -> list[Vec]:
        """Matrix product (g-matrix) @ rows, using the one-term column map."""
        out: list[Vec] = [{} for _ in range(self.dim)]
        for k, hit in enumerate(self._colmap[g]):
            if hit is not None and rows[k]:
                t, c = hit
                vec_axpy(out[t], c, rows[k])
        return out

    # -- memoized structure data -------------------------------------------

    def _memo(self, key: str, build):
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def image_algebra(self) -> list[list[Vec]]:
        """Basis of the unital matrix algebra generated by the action.

        Seeds the span with the identity and closes it under left
        multiplication by the generator matrices (every word in the generators
        is reached this way, and their span is the algebra).
        """

        def build():
            field = self.spec.field
            ech = EchelonBasis(field)
            ident = identity_rows(self.dim, field)
            ech.insert(flatten_matrix(ident, self.dim))
            mats = [ident]
            queue = [ident]
            while queue:
                b = queue.pop(0)
                for g in self.gens:
                    prod = self.gen_times(g, b)
                    if ech.insert(flatten_matrix(prod, self.dim)):
                        mats.append(prod)
                        queue.append(prod)
            return mats

        return self._memo("image_algebra", build)

    def radical_mats(self) -> list[list[Vec]]:
        """Basis of the Jacobson radical of the image algebra (trace form kernel)."""

        def build():
            return trace_radical(self.image_algebra(), self.dim, self.spec.field)

        return self._memo("radical_mats", build)

    def radical_power_chain(self) -> list[list[list[Vec]]]:
        """[J, J^2, ...] as matrix-space bases, stopping before the zero power."""

        def build():
            field = self.spec.field
            j1 = self.radical_mats()
            chain = []
            cur = j1
            while cur:
                chain.append(cur)
                nxt: list[list[Vec]] = []
                ech = EchelonBasis(field)
                for a in j1:
                    for b in cur:
                        prod = matmul_rows(a, b)
                        if not mat_is_zero(prod) and ech.insert(
                            flatten_matrix(prod, self.dim)
                        ):
                            nxt.append(prod)
                cur = nxt
            return chain

        return self._memo("radical_chain", build)

    def socle_series(self) -> list[Subspace]:
        """[Soc^1, Soc^2, ..., Soc^r = whole component]."""

        def build():
            field = self.spec.field
            chain = self.radical_power_chain()
            out = []
            for power in chain:
                rows = [row for mat in power for row in mat if row]
                out.append(
                    Subspace(field, self.dim, _ech_from(kernel_basis(rows, self.dim, field), field))
                )
            out.append(Subspace.from_vectors(field, self.dim, identity_rows(self.dim, field)))
            return out

        return self._memo("socle_series", build)

    def radical_series(self) -> list[Subspace]:
        """[Rad^0 = whole component, Rad^1, ..., Rad^r = 0]."""

        def build():
            field = self.spec.field
            chain = self.radical_power_chain()
            out = [Subspace.from_vectors(field, self.dim, identity_rows(self.dim, field))]
            for power in chain:
                cols = [col for mat in power for col in transpose_rows(mat, self.dim) if col]
                out.append(Subspace.from_vectors(field, self.dim, cols))
            out.append(Subspace.from_vectors(field, self.dim, []))
            return out

        return self._memo("radical_series", build)

    def __repr__(self):
        return (
            f"ComponentSpace(s={self.s}, n={self.trunc.n}, m={self.trunc.m}, "
            f"ell={self.spec.ell}, order={self.spec.order!r}, dim={self.dim})"
        )


def _ech_from(vectors: list[Vec], field: CyclotomicField) -> EchelonBasis:
    ech = EchelonBasis(field)
    for v in vectors:
        ech.insert(v)
    return ech


@functools.lru_cache(maxsize=None)
def component_space(s: int, trunc: Truncation, spec: RootSpec) -> ComponentSpace:
    return ComponentSpace(s, trunc, spec)


def generator_matrix(g: Generator, comp: ComponentSpace) -> list[Vec]:
    return comp.matrix(g)


def submodule_closure(seeds, comp: ComponentSpace) -> Subspace:
    """Smallest generator-stable subspace containing the seed vectors.

    Seeds may be ModVectors or coordinate dicts.
    """
    field = comp.spec.field
    ech = EchelonBasis(field)
    queue: list[Vec] = []
    for seed in seeds:
        vec = comp.coords(seed) if isinstance(seed, ModVector) else dict(seed)
        if ech.insert(vec):
            queue.append(vec)
    while queue:
        v = queue.pop(0)
        for g in comp.gens:
            w = comp.apply(g, v)
            if w and ech.insert(w):
                queue.append(w)
    return Subspace(field, comp.dim, ech)


def socle_oracle(comp: ComponentSpace) -> Subspace:
    """Largest semisimple submodule: the annihilator of the radical."""
    return comp.socle_series()[0]


def radical_oracle(comp: ComponentSpace) -> Subspace:
    """Smallest submodule with semisimple quotient: radical times the module."""
    return comp.radical_series()[1] if comp.dim else comp.radical_series()[0]


def trace_radical(
    mats: list[list[Vec]], dim: int, field: CyclotomicField
) -> list[list[Vec]]:
    """Radical of a matrix algebra via the trace bilinear form.

    Valid over characteristic-zero fields: the radical of the algebra equals
    the radical of the form (x, y) -> trace(xy) on any faithful matrix
    realization.
    """
    p = len(mats)
    gram: list[Vec] = []
    for a in range(p):
        row: Vec = {}
        for b in range(p):
            t = trace_product(mats[a], mats[b], field)
            if t:
                row[b] = t
        gram.append(row)
    out: list[list[Vec]] = []
    for combo in kernel_basis(gram, p, field):
        acc: list[Vec] = [{} for _ in range(dim)]
        for b, c in combo.items():
            for i, row in enumerate(mats[b]):
                vec_axpy(acc[i], c, row)
        if not mat_is_zero(acc):
            out.append(acc)
    return out


# -- commutant ---------------------------------------------------------------


def _diagonal_of(rows: list[Vec], dim: int):
    """Diagonal entries if the matrix is diagonal, else None."""
    diag = []
    for i, row in enumerate(rows):
        for j in row:
            if j != i:
                return None
        diag.append(row.get(i))
    return diag


def commutant(
    action: dict[Generator, list[Vec]], dim: int, field: CyclotomicField
) -> list[list[Vec]]:
    """Basis of {X : X commutes with every action matrix}.

    When all K-type matrices are diagonal (true on monomial bases and their
    generator-stable subspaces) the unknowns are cut down to pairs of basis
    vectors with equal K-eigenvalue signatures before solving.
    """
    k_gens = [g for g in action if g.kind in ("k", "kinv")]
    other = [g for g in action if g.kind in ("e", "f")]
    diags = []
    for g in sorted(k_gens, key=lambda g: (g.kind, g.i)):
        d = _diagonal_of(action[g], dim)
        if d is None:
            diags = None
            break
        diags.append(d)
    if diags is not None and diags:
        sigs = [tuple(d[j] for d in diags) for j in range(dim)]
        constraint_gens = other
    else:
        sigs = [0] * dim  # one class: all pairs unknown
        constraint_gens = list(action)
    unknown_id: dict[tuple[int, int], int] = {}
    for u in range(dim):
        for v in range(dim):
            if sigs[u] == sigs[v]:
                unknown_id[(u, v)] = len(unknown_id)
    equations: list[Vec] = []
    for g in constraint_gens:
        rows = action[g]
        cols = transpose_rows(rows, dim)
        for i in range(dim):
            for j in range(dim):
                eq: Vec = {}
                for k, c in cols[j].items():
                    uid = unknown_id.get((i, k))
                    if uid is not None:
                        s = eq.get(uid)
                        s = c if s is None else s + c
                        if s:
                            eq[uid] = s
                        elif uid in eq:
                            del eq[uid]
                for k, c in rows[i].items():
                    uid = unknown_id.get((k, j))
                    if uid is not None:
                        s = eq.get(uid)
                        s = -c if s is None else s - c
                        if s:
                            eq[uid] = s
                        elif uid in eq:
                            del eq[uid]
                if eq:
                    equations.append(eq)
    by_id = {uid: pair for pair, uid in unknown_id.items()}
    out: list[list[Vec]] = []
    for sol in kernel_basis(equations, len(unknown_id), field):
        rows_x: list[Vec] = [{} for _ in range(dim)]
        for uid, c in sol.items():
            u, v = by_id[uid]
            rows_x[u][v] = c
        out.append(rows_x)
    return out


def component_action(comp: ComponentSpace) -> dict[Generator, list[Vec]]:
    return {g: comp.matrix(g) for g in comp.gens}


def direct_sum_action(
    a: dict[Generator, list[Vec]], dim_a: int, b: dict[Generator, list[Vec]], dim_b: int
) -> tuple[dict[Generator, list[Vec]], int]:
    """Block-diagonal action on the direct sum (generator sets must agree)."""
    if set(a) != set(b):
        raise ValueError("actions have different generator sets")
    out: dict[Generator, list[Vec]] = {}
    for g, rows in a.items():
        shifted = [{j + dim_a: c for j, c in row.items()} for row in b[g]]
        out[g] = [dict(row) for row in rows] + shifted
    return out, dim_a + dim_b


# -- restriction to a submodule ----------------------------------------------


def restrict_action(
    comp: ComponentSpace, sub: Subspace
) -> tuple[dict[Generator, list[Vec]], int]:
    """Matrices of the action on a generator-closed subspace, in its canonical basis.

    Raises NotClosedError if some generator image leaves the subspace.
    """
    basis = sub.basis_vectors()
    k = len(basis)
    out: dict[Generator, list[Vec]] = {}
    for g in comp.gens:
        rows: list[Vec] = [{} for _ in range(k)]
        for col, bvec in enumerate(basis):
            img = comp.apply(g, bvec)
            cs = sub.coords(img)
            if cs is None:
                raise NotClosedError(
                    f"{g} maps a basis vector of the subspace outside it"
                )
            for r, c in enumerate(cs):
                if c:
                    rows[r][col] = c
        out[g] = rows
    return out, k


def algebra_closure(
    action: dict[Generator, list[Vec]], dim: int, field: CyclotomicField
) -> list[list[Vec]]:
    """Image algebra of an arbitrary generator action given by matrices."""
    ech = EchelonBasis(field)
    ident = identity_rows(dim, field)
    ech.insert(flatten_matrix(ident, dim))
    mats = [ident]
    queue = [ident]
    order = sorted(action, key=lambda g: (g.kind, g.i))
    while queue:
        b = queue.pop(0)
        for g in order:
            prod = matmul_rows(action[g], b)
            if ech.insert(flatten_matrix(prod, dim)):
                mats.append(prod)
                queue.append(prod)
    return mats


# -- certificates --------------------------------------------------------------


@dataclasses.dataclass
class Certificate:
    verdict: str
    detail: str
    witness: object | None = None


def simplicity_certificate(sub: Subspace, comp: ComponentSpace) -> Certificate:
    """Decide simplicity of a generator-closed subspace.

    Simple requires: zero radical of the restricted image algebra (semisimple)
    and a one-dimensional commutant (single isotypic block with trivial
    endomorphisms).  NotSimple always carries a proper nonzero closed subspace
    as witness.
    """
    field = comp.spec.field
    if sub.dim == 0:
        return Certificate("NotSimple", "the zero module is not simple")
    action, dim = restrict_action(comp, sub)
    algebra = algebra_closure(action, dim, field)
    rad = trace_radical(algebra, dim, field)
    if rad:
        cols = [col for mat in rad for col in transpose_rows(mat, dim) if col]
        witness = _lift_subspace(Subspace.from_vectors(field, dim, cols), sub, comp)
        return Certificate(
            "NotSimple", "the restricted action has a nonzero radical", witness
        )
    comm = commutant(action, dim, field)
    if len(comm) == 1:
        return Certificate("Simple", "semisimple with one-dimensional commutant")
    for bvec in sub.basis_vectors():
        closure = submodule_closure([bvec], comp)
        if 0 < closure.dim < sub.dim:
            return Certificate(
                "NotSimple", "a basis vector generates a proper submodule", closure
            )
    return Certificate(
        "Inconclusive",
        f"semisimple with commutant of dimension {len(comm)}; no proper submodule found",
    )


def _lift_subspace(inner: Subspace, sub: Subspace, comp: ComponentSpace) -> Subspace:
    """Map a subspace given in sub-coordinates back to ambient coordinates."""
    basis = sub.basis_vectors()
    field = comp.spec.field
    lifted = []
    for row in inner.basis_vectors():
        acc: Vec = {}
        for j, c in row.items():
            vec_axpy(acc, c, basis[j])
        lifted.append(acc)
    return Subspace.from_vectors(field, comp.dim, lifted)


# polynomial helpers over the scalar field (ascending coefficient lists)


def _poly_normalize(p: list[CycScalar]) -> list[CycScalar]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_eval_scalar(p: list[CycScalar], c: CycScalar, field: CyclotomicField) -> CycScalar:
    acc = field.zero
    for coeff in reversed(p):
        acc = acc * c + coeff
    return acc


def _poly_divmod(
    num: list[CycScalar], den: list[CycScalar], field: CyclotomicField
) -> tuple[list[CycScalar], list[CycScalar]]:
    num = list(num)
    dn = len(den) - 1
    inv = den[dn].inverse()
    quot = [field.zero] * max(0, len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c = num[dn + k] * inv
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] = num[k + j] - c * dj
    return _poly_normalize(quot), _poly_normalize(num[:dn])


def _poly_mul_scalar(a: list[CycScalar], b: list[CycScalar], field: CyclotomicField):
    out = [field.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
    return _poly_normalize(out)


def _poly_bezout(
    f: list[CycScalar], g: list[CycScalar], field: CyclotomicField
) -> tuple[list[CycScalar], list[CycScalar]] | None:
    """(u, v) with u*f + v*g = 1, or None if f and g share a factor."""
    r0, r1 = list(f), list(g)
    u0: list[CycScalar] = [field.one]
    u1: list[CycScalar] = []
    v0: list[CycScalar] = []
    v1: list[CycScalar] = [field.one]
    while r1:
        q, r = _poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        qu = _poly_mul_scalar(q, u1, field) if q and u1 else []
        qv = _poly_mul_scalar(q, v1, field) if q and v1 else []
        u0, u1 = u1, _poly_sub(u0, qu, field)
        v0, v1 = v1, _poly_sub(v0, qv, field)
    if len(r0) != 1:
        return None
    inv = r0[0].inverse()
    return [c * inv for c in u0], [c * inv for c in v0]


def _poly_sub(a: list[CycScalar], b: list[CycScalar], field: CyclotomicField):
    out = []
    for i in range(max(len(a), len(b))):
        x = a[i] if i < len(a) else field.zero
        y = b[i] if i < len(b) else field.zero
        out.append(x - y)
    return _poly_normalize(out)


def minimal_polynomial(
    rows: list[Vec], dim: int, field: CyclotomicField
) -> list[CycScalar]:
    """Monic minimal polynomial of a matrix, ascending coefficients."""
    offset = dim * dim
    ech = EchelonBasis(field)
    cur = identity_rows(dim, field)
    k = 0
    while True:
        vec = flatten_matrix(cur, dim)
        vec[offset + k] = field.one
        res = ech.reduce(vec)
        if all(c >= offset for c in res):
            lead = res[offset + k]
            inv = lead.inverse()
            return [res.get(offset + j, field.zero) * inv for j in range(k + 1)]
        ech.insert(vec)
        cur = matmul_rows(cur, rows) if k else [dict(r) for r in rows]
        k += 1


def _poly_eval_matrix(
    p: list[CycScalar], rows: list[Vec], dim: int, field: CyclotomicField
) -> list[Vec]:
    acc: list[Vec] = [{} for _ in range(dim)]
    for coeff in reversed(p):
        acc = matmul_rows(acc, rows)
        if coeff:
            for i in range(dim):
                s = acc[i].get(i)
                s = coeff if s is None else s + coeff
                if s:
                    acc[i][i] = s
                elif i in acc[i]:
                    del acc[i][i]
    return acc


def _find_idempotent(
    comm: list[list[Vec]], dim: int, field: CyclotomicField, spec: RootSpec
) -> list[Vec] | None:
    """Search the commutant for a nontrivial idempotent.

    For each basis element, split its minimal polynomial at roots drawn from a
    deterministic candidate set (0, +-1, q powers, diagonal entries); a root of
    full multiplicity k gives coprime factors (t-c)^k and the cofactor, and the
    Bezout identity yields an exact idempotent projection.
    """
    ident = identity_rows(dim, field)
    for x in comm:
        p = minimal_polynomial(x, dim, field)
        if len(p) <= 2:
            continue  # scalar or linear: x acts as c*I + nothing to split
        candidates: list[CycScalar] = [field.zero, field.one, -field.one]
        candidates.extend(spec.q_power(j) for j in range(spec.N))
        for i in range(dim):
            c = x[i].get(i)
            if c is not None:
                candidates.append(c)
        seen = set()
        for c in candidates:
            key = (c.nums, c.den)
            if key in seen:
                continue
            seen.add(key)
            if _poly_eval_scalar(p, c, field):
                continue
            # extract the full (t - c)^k factor
            f = [field.one]
            rest = list(p)
            linear = [-c, field.one]
            while True:
                q, r = _poly_divmod(rest, linear, field)
                if r:
                    break
                rest = q
                f = _poly_mul_scalar(f, linear, field)
            if len(rest) <= 1:
                continue  # p is a pure power of (t - c): no split
            bez = _poly_bezout(f, rest, field)
            if bez is None:
                continue
            u, _v = bez
            # e = (u * f)(x) projects onto the generalized eigenspaces away from c
            e = _poly_eval_matrix(_poly_mul_scalar(u, f, field), x, dim, field)
            if mat_is_zero(e) or mat_equal(e, ident):
                continue
            if not mat_equal(matmul_rows(e, e), e):
                raise InvariantViolationError("idempotent construction failed")
            return e
    return None


def indecomposability_certificate(
    source: ComponentSpace | tuple[dict[Generator, list[Vec]], int],
    spec: RootSpec | None = None,
) -> Certificate:
    """Decide decomposability through the endomorphism algebra.

    Indecomposable when End/rad(End) is one-dimensional (local endomorphism
    ring).  Decomposable when a nontrivial idempotent endomorphism is exhibited
    (its image and kernel are complementary submodules).  Otherwise
    Inconclusive.
    """
    if isinstance(source, ComponentSpace):
        action, dim = component_action(source), source.dim
        spec = source.spec
    else:
        action, dim = source
        if spec is None:
            raise ValueError("spec is required when passing raw action matrices")
    field = spec.field
    if dim == 0:
        return Certificate("Inconclusive", "zero module")
    comm = commutant(action, dim, field)
    rad = trace_radical(comm, dim, field)
    top_dim = len(comm) - len(rad)
    if top_dim == 1:
        return Certificate(
            "Indecomposable",
            f"endomorphism algebra is local (dim End = {len(comm)}, semisimple part 1)",
        )
    e = _find_idempotent(comm, dim, field, spec)
    if e is not None:
        return Certificate(
            "Decomposable",
            "a nontrivial idempotent endomorphism splits the module",
            e,
        )
    return Certificate(
        "Inconclusive",
        f"End/rad(End) has dimension {top_dim} but no idempotent was found",
    )


# -- defining relations --------------------------------------------------------


def relations_report(comp: ComponentSpace) -> dict[str, bool]:
    """Verify the defining relations of u_q(sl_n) as exact matrix identities."""
    spec = comp.spec
    field = spec.field
    n = comp.trunc.n
    dim = comp.dim
    ident = identity_rows(dim, field)
    E = {i: comp.matrix(Generator("e", i)) for i in range(1, n)}
    F = {i: comp.matrix(Generator("f", i)) for i in range(1, n)}
    K = {i: comp.matrix(Generator("k", i)) for i in range(1, n)}
    Kinv = {i: comp.matrix(Generator("kinv", i)) for i in range(1, n)}
    out: dict[str, bool] = {}

    def scaled(rows, c):
        return [vec_scale(r, c) for r in rows]

    def msub(a, b):
        diff = []
        for ra, rb in zip(a, b):
            row = dict(ra)
            vec_axpy(row, -field.one, rb)
            diff.append(row)
        return diff

    qdiff_inv = (spec.q - spec.q_power(-1)).inverse()
    for i in range(1, n):
        out[f"K{i} K{i}^-1 = 1"] = mat_equal(matmul_rows(K[i], Kinv[i]), ident)
        for j in range(1, n):
            a_ij = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            lhs = matmul_rows(K[i], matmul_rows(E[j], Kinv[i]))
            out[f"K{i} E{j} K{i}^-1 = q^{a_ij} E{j}"] = mat_equal(
                lhs, scaled(E[j], spec.q_power(a_ij))
            )
            lhs = matmul_rows(K[i], matmul_rows(F[j], Kinv[i]))
            out[f"K{i} F{j} K{i}^-1 = q^{-a_ij} F{j}"] = mat_equal(
                lhs, scaled(F[j], spec.q_power(-a_ij))
            )
            out[f"K{i} K{j} = K{j} K{i}"] = mat_equal(
                matmul_rows(K[i], K[j]), matmul_rows(K[j], K[i])
            )
            comm_ef = msub(matmul_rows(E[i], F[j]), matmul_rows(F[j], E[i]))
            if i == j:
                rhs = scaled(msub(K[i], Kinv[i]), qdiff_inv)
                out[f"[E{i}, F{i}] = (K{i} - K{i}^-1)/(q - q^-1)"] = mat_equal(
                    comm_ef, rhs
                )
            else:
                out[f"[E{i}, F{j}] = 0"] = mat_is_zero(comm_ef)
        power_e, power_f = E[i], F[i]
        for _ in range(spec.ell - 1):
            power_e = matmul_rows(power_e, E[i])
            power_f = matmul_rows(power_f, F[i])
        out[f"E{i}^ell = 0"] = mat_is_zero(power_e)
        out[f"F{i}^ell = 0"] = mat_is_zero(power_f)
        kpow = ident
        for _ in range(2 * spec.ell):
            kpow = matmul_rows(kpow, K[i])
        out[f"K{i}^(2 ell) = 1"] = mat_equal(kpow, ident)
    two = q_int(2, spec)
    for i in range(1, n):
        for j in range(1, n):
            if i == j:
                continue
            if abs(i - j) == 1:
                lhs = msub(
                    msub(
                        matmul_rows(E[i], matmul_rows(E[i], E[j])),
                        scaled(matmul_rows(E[i], matmul_rows(E[j], E[i])), two),
                    ),
                    scaled(matmul_rows(E[j], matmul_rows(E[i], E[i])), -field.one),
                )
                out[f"Serre E{i} E{j}"] = mat_is_zero(lhs)
                lhs = msub(
                    msub(
                        matmul_rows(F[i], matmul_rows(F[i], F[j])),
                        scaled(matmul_rows(F[i], matmul_rows(F[j], F[i])), two),
                    ),
                    scaled(matmul_rows(F[j], matmul_rows(F[i], F[i])), -field.one),
                )
                out[f"Serre F{i} F{j}"] = mat_is_zero(lhs)
            else:
                out[f"E{i} E{j} commute"] = mat_equal(
                    matmul_rows(E[i], E[j]), matmul_rows(E[j], E[i])
                )
                out[f"F{i} F{j} commute"] = mat_equal(
                    matmul_rows(F[i], F[j]), matmul_rows(F[j], F[i])
                )
    return out
