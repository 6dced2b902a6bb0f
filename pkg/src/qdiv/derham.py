"""Quantum de Rham complex over the truncated divided power algebras.

Differential forms are spanned by x^(alpha) dx_{j_1} ... dx_{j_k} with
strictly increasing wedge words.  Transposing an adjacent out-of-order pair
dx_j dx_i with j > i costs -q^{-1}, so every word canonicalizes to the
increasing one with an exact scalar.  The Chevalley action extends from
polynomials to forms through the coproduct, the differential is a degree +1
module map squaring to zero, and in the truncated case its cohomology is one
line per axis subset, concentrated on weights at the truncation boundary.
"""

from __future__ import annotations

import dataclasses
import itertools
import math

from .cyclotomic import CycScalar, RootSpec
from .dpalgebra import MultiIndex, Truncation, bounded_compositions
from .errors import (
    AxisOutOfRangeError,
    DegreeMismatchError,
    InvariantViolationError,
)
from .linalg import EchelonBasis, Vec, transpose_rows
from .uqaction import Generator, _one_term, generators

Word = tuple[int, ...]
FormTerm = tuple[MultiIndex, Word]


def wedge_canonicalize(word: Word, spec: RootSpec):
    """(scalar, increasing word) equal to the given wedge word, or None.

    Words with a repeated axis are zero.  Each transposition of an adjacent
    descending pair contributes one factor -q^{-1}.
    """
    if len(set(word)) != len(word):
        return None
    items = list(word)
    inversions = 0
    for t in range(1, len(items)):
        k = t
        while k > 0 and items[k - 1] > items[k]:
            items[k - 1], items[k] = items[k], items[k - 1]
            inversions += 1
            k -= 1
    coeff = spec.q_power(-inversions)
    if inversions % 2:
        coeff = -coeff
    return coeff, tuple(items)


class FormVector:
    """Sparse exact-coefficient combination of monomial differential forms."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[FormTerm, CycScalar] | None = None):
        self.terms = {t: c for t, c in (terms or {}).items() if c}

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, FormVector):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other: "FormVector") -> "FormVector":
        out = dict(self.terms)
        for t, c in other.terms.items():
            s = out.get(t)
            s = c if s is None else s + c
            if s:
                out[t] = s
            elif t in out:
                del out[t]
        return FormVector(out)

    def __neg__(self) -> "FormVector":
        return FormVector({t: -c for t, c in self.terms.items()})

    def __sub__(self, other: "FormVector") -> "FormVector":
        return self + (-other)

    def scaled(self, c: CycScalar) -> "FormVector":
        if not c:
            return FormVector()
        return FormVector({t: c * v for t, v in self.terms.items()})

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][1], kv[0][0]))

    def form_degree(self) -> int:
        degrees = {len(word) for _, word in self.terms}
        if len(degrees) != 1:
            raise DegreeMismatchError(f"mixed form degrees {sorted(degrees)}")
        return degrees.pop()

    def __repr__(self):
        return f"FormVector({len(self.terms)} terms)"


def form_term(
    alpha: MultiIndex, word: Word, spec: RootSpec, coeff: CycScalar | int = 1
) -> FormVector:
    """Single form x^(alpha) with the given wedge word, canonicalized."""
    hit = wedge_canonicalize(word, spec)
    if hit is None:
        return FormVector()
    sign, canonical = hit
    c = spec.scalar(coeff) if isinstance(coeff, int) else coeff
    return FormVector({(alpha, canonical): c * sign})


def weight_of(term: FormTerm) -> MultiIndex:
    """Combined exponent: polynomial part plus one for each wedge factor."""
    alpha, word = term
    out = list(alpha)
    for j in word:
        if not 1 <= j <= len(alpha):
            raise AxisOutOfRangeError(f"axis {j} outside 1..{len(alpha)}")
        out[j - 1] += 1
    return tuple(out)


def form_term_str(term: FormTerm) -> str:
    alpha, word = term
    poly = "x^(" + ",".join(str(a) for a in alpha) + ")"
    if not word:
        return poly
    return poly + " " + "^".join(f"dx{j}" for j in word)


def exterior_action(
    g: Generator, word: Word, spec: RootSpec
) -> list[tuple[CycScalar, Word]]:
    """Action of one generator on a wedge word through the iterated coproduct.

    Raising operators carry the group-like factor on later slots, lowering
    operators its inverse on earlier slots; both specialize to q-power
    twists.  Results are canonicalized, zero terms dropped.
    """
    i = g.i
    if g.kind in ("k", "kinv"):
        exp = 0
        for j in word:
            exp += (1 if j == i else 0) - (1 if j == i + 1 else 0)
        if g.kind == "kinv":
            exp = -exp
        return [(spec.q_power(exp), word)]
    out: list[tuple[CycScalar, Word]] = []
    for t, j in enumerate(word):
        if g.kind == "e":
            if j != i + 1:
                continue
            twist = 0
            for later in word[t + 1 :]:
                twist += (1 if later == i else 0) - (1 if later == i + 1 else 0)
            replaced = word[:t] + (i,) + word[t + 1 :]
        else:  # "f"
            if j != i:
                continue
            twist = 0
            for earlier in word[:t]:
                twist -= (1 if earlier == i else 0) - (1 if earlier == i + 1 else 0)
            replaced = word[:t] + (i + 1,) + word[t + 1 :]
        hit = wedge_canonicalize(replaced, spec)
        if hit is None:
            continue
        sign, canonical = hit
        out.append((spec.q_power(twist) * sign, canonical))
    return out


def tensor_action(
    g: Generator, v: FormVector, spec: RootSpec, trunc: Truncation | None = None
) -> FormVector:
    """Apply one generator to a form via the coproduct on (polynomial, word)."""
    cap = None if trunc is None else trunc.cap(spec)
    out = FormVector()
    for (alpha, word), c in v.terms.items():
        if g.kind in ("k", "kinv"):
            hit = _one_term(g, alpha, spec, cap)
            _, eig = hit
            for fc, w in exterior_action(g, word, spec):
                out = out + FormVector({(alpha, w): c * eig * fc})
            continue
        if g.kind == "e":
            first = _one_term(g, alpha, spec, cap)
            if first is not None:
                target, coeff = first
                kcoeff, kword = exterior_action(
                    Generator("k", g.i), word, spec
                )[0]
                out = out + FormVector({(target, kword): c * coeff * kcoeff})
            for fc, w in exterior_action(g, word, spec):
                out = out + FormVector({(alpha, w): c * fc})
        else:  # "f"
            first = _one_term(g, alpha, spec, cap)
            if first is not None:
                target, coeff = first
                out = out + FormVector({(target, word): c * coeff})
            _, kinv_eig = _one_term(Generator("kinv", g.i), alpha, spec, cap)
            for fc, w in exterior_action(g, word, spec):
                out = out + FormVector({(alpha, w): c * kinv_eig * fc})
    return out


def differential(v: FormVector, spec: RootSpec) -> FormVector:
    """Exterior differential: left wedge with the twisted partial of each axis."""
    if v.terms:
        v.form_degree()
    out = FormVector()
    for (alpha, word), c in v.terms.items():
        prefix = 0
        for j in range(1, len(alpha) + 1):
            a = alpha[j - 1]
            if a >= 1:
                coeff = spec.q_power(-prefix)
                lowered = alpha[: j - 1] + (a - 1,) + alpha[j:]
                out = out + form_term(lowered, (j,) + word, spec, c * coeff)
            prefix += a
    return out


def weight_block(
    gamma: MultiIndex, s: int, trunc: Truncation, spec: RootSpec
) -> tuple[FormTerm, ...]:
    """Basis of the forms of wedge degree s and combined exponent gamma.

    Axes where gamma exceeds the polynomial cap must appear in the word,
    axes where gamma vanishes must not.  The basis is empty when gamma has
    an axis above cap + 1.
    """
    cap = trunc.cap(spec)
    n = trunc.n
    if len(gamma) != n:
        raise AxisOutOfRangeError(f"weight length {len(gamma)} vs rank {n}")
    if any(g < 0 for g in gamma):
        return ()
    if cap is not None and any(g > cap + 1 for g in gamma):
        return ()
    forced = [i for i in range(1, n + 1) if cap is not None and gamma[i - 1] == cap + 1]
    free = [
        i
        for i in range(1, n + 1)
        if gamma[i - 1] >= 1 and (cap is None or gamma[i - 1] <= cap)
    ]
    need = s - len(forced)
    if need < 0 or need > len(free):
        return ()
    out = []
    for extra in itertools.combinations(free, need):
        word = tuple(sorted(forced + list(extra)))
        alpha = list(gamma)
        for j in word:
            alpha[j - 1] -= 1
        out.append((tuple(alpha), word))
    out.sort(key=lambda term: term[1])
    return tuple(out)


def block_matrix(
    gamma: MultiIndex, s: int, trunc: Truncation, spec: RootSpec
) -> tuple[list[Vec], tuple[FormTerm, ...], tuple[FormTerm, ...]]:
    """Row-major matrix of the differential from wedge degree s to s + 1.

    Returns (rows, source basis, target basis); rows are indexed by the
    target basis, columns by the source.
    """
    src = weight_block(gamma, s, trunc, spec)
    dst = weight_block(gamma, s + 1, trunc, spec)
    index = {term: r for r, term in enumerate(dst)}
    rows: list[Vec] = [{} for _ in dst]
    for col, (alpha, word) in enumerate(src):
        image = differential(FormVector({(alpha, word): spec.one}), spec)
        for term, c in image.terms.items():
            r = index.get(term)
            if r is None:
                raise InvariantViolationError(
                    f"differential left its weight block at {form_term_str(term)}"
                )
            rows[r][col] = c
    return rows, src, dst


def _rank(rows: list[Vec], field) -> int:
    ech = EchelonBasis(field)
    for row in rows:
        if row:
            ech.insert(dict(row))
    return ech.rank


def _weights(trunc: Truncation, spec: RootSpec):
    top = trunc.cap(spec) + 1
    return itertools.product(range(top + 1), repeat=trunc.n)


def d_square_check(trunc: Truncation, spec: RootSpec) -> int:
    """Verify d(d(omega)) = 0 on every single monomial form; returns the count."""
    if trunc.m < 1:
        raise ValueError("the exhaustive check needs a finite truncation")
    checked = 0
    cap = trunc.cap(spec)
    for gamma in _weights(trunc, spec):
        for s in range(0, trunc.n + 1):
            for alpha, word in weight_block(gamma, s, trunc, spec):
                v = FormVector({(alpha, word): spec.one})
                if differential(differential(v, spec), spec):
                    raise InvariantViolationError(
                        f"d^2 != 0 at {form_term_str((alpha, word))}"
                    )
                checked += 1
    if checked != (cap + 1) ** trunc.n * 2**trunc.n:
        raise InvariantViolationError("weight blocks do not partition the forms")
    return checked


def module_map_check(trunc: Truncation, spec: RootSpec) -> int:
    """Verify d(g . v) = g . d(v) for every generator and monomial form."""
    if trunc.m < 1:
        raise ValueError("the exhaustive check needs a finite truncation")
    checked = 0
    for gamma in _weights(trunc, spec):
        for s in range(0, trunc.n + 1):
            for alpha, word in weight_block(gamma, s, trunc, spec):
                v = FormVector({(alpha, word): spec.one})
                dv = differential(v, spec)
                for g in generators(trunc.n):
                    lhs = differential(tensor_action(g, v, spec, trunc), spec)
                    rhs = tensor_action(g, dv, spec, trunc)
                    if lhs != rhs:
                        raise InvariantViolationError(
                            f"d fails to commute with {g} "
                            f"at {form_term_str((alpha, word))}"
                        )
                    checked += 1
    return checked


@dataclasses.dataclass(frozen=True)
class CohomologyDegree:
    """One wedge degree of the truncated complex."""

    s: int
    dim: int
    expected: int
    representatives: tuple[FormTerm, ...]

    @property
    def ok(self) -> bool:
        return self.dim == self.expected


@dataclasses.dataclass(frozen=True)
class CohomologyReport:
    """Cohomology of the truncated complex, one entry per wedge degree."""

    n: int
    m: int
    ell: int
    order: str
    degrees: tuple[CohomologyDegree, ...]

    @property
    def ok(self) -> bool:
        return all(d.ok for d in self.degrees)


def cohomology(trunc: Truncation, spec: RootSpec) -> CohomologyReport:
    """Compute every cohomology dimension of the truncated complex exactly.

    Works weight by weight: the kernel minus image count of each block must
    vanish except on the boundary weights (cap + 1 on a subset of axes, zero
    elsewhere), which contribute one line each.  Also verifies that the
    canonical representatives are cocycles and that block dimensions add up
    to the full space.
    """
    if trunc.m < 1:
        raise ValueError("cohomology of the truncated complex needs m >= 1")
    n = trunc.n
    cap = trunc.cap(spec)
    field = spec.field
    dims = [0] * (n + 1)
    support: dict[MultiIndex, tuple[int, int]] = {}
    totals = [0] * (n + 1)
    for gamma in _weights(trunc, spec):
        ranks = []
        sizes = []
        for s in range(0, n + 1):
            rows, src, _ = block_matrix(gamma, s, trunc, spec)
            sizes.append(len(src))
            ranks.append(_rank(rows, field))
        for s in range(0, n + 1):
            totals[s] += sizes[s]
            kernel = sizes[s] - ranks[s]
            image = ranks[s - 1] if s > 0 else 0
            h = kernel - image
            if h < 0:
                raise InvariantViolationError(
                    f"image exceeds kernel at weight {gamma}, degree {s}"
                )
            if h:
                if gamma in support:
                    raise InvariantViolationError(
                        f"two wedge degrees contribute at weight {gamma}"
                    )
                support[gamma] = (s, h)
                dims[s] += h
    for s in range(0, n + 1):
        if totals[s] != (cap + 1) ** n * math.comb(n, s):
            raise InvariantViolationError(
                f"weight blocks do not partition wedge degree {s}"
            )

    boundary = cap + 1
    expected_support = {}
    for r in range(0, n + 1):
        for subset in itertools.combinations(range(1, n + 1), r):
            gamma = tuple(boundary if i in subset else 0 for i in range(1, n + 1))
            expected_support[gamma] = (r, 1)
    if support != expected_support:
        raise InvariantViolationError(
            "cohomology support is not the set of boundary weights"
        )

    degrees = []
    for s in range(0, n + 1):
        reps = []
        for subset in itertools.combinations(range(1, n + 1), s):
            alpha = tuple(cap if i in subset else 0 for i in range(1, n + 1))
            term = (alpha, subset)
            if differential(FormVector({term: spec.one}), spec):
                raise InvariantViolationError(
                    f"representative {form_term_str(term)} is not a cocycle"
                )
            reps.append(term)
        degrees.append(
            CohomologyDegree(
                s=s,
                dim=dims[s],
                expected=math.comb(n, s),
                representatives=tuple(reps),
            )
        )
    return CohomologyReport(
        n=n, m=trunc.m, ell=spec.ell, order=spec.order, degrees=tuple(degrees)
    )


@dataclasses.dataclass(frozen=True)
class ActionOnClasses:
    """How the Chevalley generators act on the cohomology representatives."""

    n: int
    m: int
    ell: int
    order: str
    raising_lowering_trivial: bool
    k_eigenvalues: tuple[tuple[FormTerm, tuple[str, ...]], ...]
    has_negative_eigenvalue: bool


def action_on_cohomology(trunc: Truncation, spec: RootSpec) -> ActionOnClasses:
    """Verify the action on classes: e and f land in exact forms, K acts by signs.

    For each representative and each raising or lowering generator, the image
    is decomposed by weight and checked for membership in the image of the
    differential, block by block.  The K eigenvalues are collected exactly.
    """
    report = cohomology(trunc, spec)
    field = spec.field
    one = spec.one
    minus_one = -one
    has_negative = False
    k_rows = []
    for deg in report.degrees:
        for term in deg.representatives:
            v = FormVector({term: one})
            s = len(term[1])
            for g in generators(trunc.n):
                if g.kind in ("k", "kinv"):
                    continue
                image = tensor_action(g, v, spec, trunc)
                if not image:
                    continue
                by_weight: dict[MultiIndex, dict[FormTerm, CycScalar]] = {}
                for t, c in image.terms.items():
                    by_weight.setdefault(weight_of(t), {})[t] = c
                for gamma, terms in by_weight.items():
                    rows, _, dst = block_matrix(gamma, s - 1, trunc, spec)
                    cols = transpose_rows(rows, len(dst))
                    ech = EchelonBasis(field)
                    for col in cols:
                        if col:
                            ech.insert(dict(col))
                    index = {t: r for r, t in enumerate(dst)}
                    vec = {index[t]: c for t, c in terms.items()}
                    if not ech.contains(vec):
                        raise InvariantViolationError(
                            f"{g} does not act by zero on the class "
                            f"{form_term_str(term)}"
                        )
            eigs = []
            for i in range(1, trunc.n):
                image = tensor_action(Generator("k", i), v, spec, trunc)
                if set(image.terms) != {term}:
                    raise InvariantViolationError(
                        f"K{i} does not scale the class {form_term_str(term)}"
                    )
                eig = image.terms[term]
                if eig != one and eig != minus_one:
                    raise InvariantViolationError(
                        f"K{i} eigenvalue on {form_term_str(term)} is not a sign"
                    )
                if eig == minus_one:
                    has_negative = True
                eigs.append(eig.render())
            k_rows.append((term, tuple(eigs)))
    return ActionOnClasses(
        n=trunc.n,
        m=trunc.m,
        ell=spec.ell,
        order=spec.order,
        raising_lowering_trivial=True,
        k_eigenvalues=tuple(k_rows),
        has_negative_eigenvalue=has_negative,
    )


@dataclasses.dataclass(frozen=True)
class ExactnessReport:
    """Acyclicity bookkeeping for the untruncated complex up to a weight budget."""

    n: int
    ell: int
    order: str
    budget: int
    weights_checked: int
    constants_dim: int
    per_total: tuple[tuple[int, int], ...]

    @property
    def ok(self) -> bool:
        return self.constants_dim == 1


def untruncated_exactness(n: int, spec: RootSpec, budget: int) -> ExactnessReport:
    """Verify the untruncated complex is exact except for constants.

    Every weight of total size up to the budget is checked block by block:
    kernel equals image everywhere except the zero weight in wedge degree
    zero, which contributes the constants.
    """
    trunc = Truncation(n, 0)
    field = spec.field
    checked = 0
    constants = 0
    per_total = []
    for total in range(0, budget + 1):
        at_total = 0
        for gamma in bounded_compositions(total, n, None):
            ranks = []
            sizes = []
            for s in range(0, n + 1):
                rows, src, _ = block_matrix(gamma, s, trunc, spec)
                sizes.append(len(src))
                ranks.append(_rank(rows, field))
            for s in range(0, n + 1):
                kernel = sizes[s] - ranks[s]
                image = ranks[s - 1] if s > 0 else 0
                h = kernel - image
                if any(gamma) or s > 0:
                    if h:
                        raise InvariantViolationError(
                            f"untruncated complex not exact at weight {gamma}, "
                            f"degree {s}"
                        )
                else:
                    constants += h
            checked += 1
            at_total += 1
        per_total.append((total, at_total))
    return ExactnessReport(
        n=n,
        ell=spec.ell,
        order=spec.order,
        budget=budget,
        weights_checked=checked,
        constants_dim=constants,
        per_total=tuple(per_total),
    )
