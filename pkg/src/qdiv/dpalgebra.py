"""The quantum divided power algebra and its truncations.

Basis monomials are written x^(alpha) for multi-indices alpha in Z_+^n.  The
product twists the classical divided power rule by powers of q:

    x^(alpha) * x^(beta) = q^(alpha*beta) [alpha+beta choose alpha] x^(alpha+beta)

where alpha*beta sums alpha_i * beta_j over pairs i > j and the bracket is the
product of coordinatewise Gaussian binomials.  The truncation of order m kills
every monomial with a coordinate above m*ell - 1; its graded components are
the finite-dimensional modules the rest of the package studies.
"""

from __future__ import annotations

import dataclasses
import functools

from .cyclotomic import CycScalar, RootSpec
from .errors import (
    AxisOutOfRangeError,
    DegreeOutOfRangeError,
    LengthMismatchError,
)
from .qarith import q_binomial

MultiIndex = tuple[int, ...]


def star(alpha: MultiIndex, beta: MultiIndex) -> int:
    """sum of alpha_i * beta_j over all pairs i > j (1-based positions)."""
    if len(alpha) != len(beta):
        raise LengthMismatchError(f"length {len(alpha)} vs {len(beta)}")
    total = 0
    prefix = 0
    for i in range(len(alpha)):
        total += alpha[i] * prefix
        prefix += beta[i]
    return total


def theta(alpha: MultiIndex, beta: MultiIndex, spec: RootSpec) -> CycScalar:
    """Commutation factor: x^(alpha) x^(beta) = theta(alpha,beta) x^(beta) x^(alpha)."""
    return spec.q_power(star(alpha, beta) - star(beta, alpha))


@dataclasses.dataclass(frozen=True)
class Truncation:
    """Ambient rank n and truncation order m (m = 0 means untruncated)."""

    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError("n must be an integer >= 1")
        if not isinstance(self.m, int) or self.m < 0:
            raise ValueError("m must be an integer >= 0")

    def cap(self, spec: RootSpec) -> int | None:
        """Largest allowed exponent per coordinate, or None if untruncated."""
        return None if self.m == 0 else self.m * spec.ell - 1

    def total_degree(self, spec: RootSpec) -> int | None:
        """Top degree N = n*(m*ell - 1) of the truncated algebra."""
        cap = self.cap(spec)
        return None if cap is None else self.n * cap

    def contains(self, alpha: MultiIndex, spec: RootSpec) -> bool:
        if len(alpha) != self.n:
            raise LengthMismatchError(f"index length {len(alpha)} vs n={self.n}")
        cap = self.cap(spec)
        return all(a >= 0 and (cap is None or a <= cap) for a in alpha)


class ModVector:
    """Sparse exact vector: finitely many monomials with CycScalar coefficients.

    Never stores an explicit zero coefficient.  Supports +, -, scalar
    multiplication and exact equality.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: dict[MultiIndex, CycScalar] | None = None):
        self.terms: dict[MultiIndex, CycScalar] = {}
        if terms:
            for idx, c in terms.items():
                if c:
                    self.terms[idx] = c

    @classmethod
    def monomial(cls, alpha: MultiIndex, spec: RootSpec, coeff=None) -> "ModVector":
        c = spec.one if coeff is None else coeff
        return cls({tuple(alpha): c} if c else {})

    @classmethod
    def zero(cls) -> "ModVector":
        return cls()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def items(self) -> list[tuple[MultiIndex, CycScalar]]:
        """Terms in lexicographic index order (deterministic)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def __add__(self, other: "ModVector") -> "ModVector":
        out = dict(self.terms)
        for idx, c in other.terms.items():
            s = out.get(idx)
            s = c if s is None else s + c
            if s:
                out[idx] = s
            elif idx in out:
                del out[idx]
        return ModVector(out)

    def __neg__(self) -> "ModVector":
        return ModVector({idx: -c for idx, c in self.terms.items()})

    def __sub__(self, other: "ModVector") -> "ModVector":
        return self + (-other)

    def scale(self, c) -> "ModVector":
        if not c:
            return ModVector()
        return ModVector({idx: c * v for idx, v in self.terms.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ModVector):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "ModVector(0)"
        body = " + ".join(f"({c}) x^{idx}" for idx, c in self.items())
        return f"ModVector({body})"


def multiply(
    alpha: MultiIndex,
    beta: MultiIndex,
    spec: RootSpec,
    trunc: Truncation | None = None,
) -> ModVector:
    """Product x^(alpha) * x^(beta), in the truncation if one is given."""
    if len(alpha) != len(beta):
        raise LengthMismatchError(f"length {len(alpha)} vs {len(beta)}")
    if any(a < 0 for a in alpha) or any(b < 0 for b in beta):
        raise ValueError("multi-indices must be nonnegative")
    total = tuple(a + b for a, b in zip(alpha, beta))
    if trunc is not None:
        cap = trunc.cap(spec)
        if cap is not None and any(t > cap for t in total):
            return ModVector()
    coeff = spec.q_power(star(alpha, beta))
    for a, t in zip(alpha, total):
        coeff = coeff * q_binomial(t, a, spec)
        if not coeff:
            return ModVector()
    return ModVector({total: coeff})


def multiply_vectors(
    u: ModVector, v: ModVector, spec: RootSpec, trunc: Truncation | None = None
) -> ModVector:
    """Bilinear extension of `multiply` to sparse vectors."""
    out = ModVector()
    for a, ca in u.terms.items():
        for b, cb in v.terms.items():
            out = out + multiply(a, b, spec, trunc).scale(ca * cb)
    return out


def sigma_apply(i: int, v: ModVector, spec: RootSpec) -> ModVector:
    """Grouplike scaling sigma_i: x^(beta) -> q^(beta_i) x^(beta); i is 1-based."""
    out: dict[MultiIndex, CycScalar] = {}
    for beta, c in v.terms.items():
        if not 1 <= i <= len(beta):
            raise AxisOutOfRangeError(f"axis {i} outside 1..{len(beta)}")
        out[beta] = c * spec.q_power(beta[i - 1])
    return ModVector(out)


def partial_apply(i: int, v: ModVector, spec: RootSpec) -> ModVector:
    """Twisted partial derivative against the i-th divided power (1-based).

    x^(beta) -> q^(-(beta_1 + ... + beta_(i-1))) x^(beta - e_i), zero when
    beta_i = 0.
    """
    out = ModVector()
    for beta, c in v.terms.items():
        if not 1 <= i <= len(beta):
            raise AxisOutOfRangeError(f"axis {i} outside 1..{len(beta)}")
        if beta[i - 1] == 0:
            continue
        target = beta[: i - 1] + (beta[i - 1] - 1,) + beta[i:]
        coeff = c * spec.q_power(-sum(beta[: i - 1]))
        out = out + ModVector({target: coeff})
    return out


@functools.lru_cache(maxsize=None)
def bounded_compositions(total: int, slots: int, cap: int | None) -> tuple[MultiIndex, ...]:
    """All tuples of `slots` integers in [0, cap] summing to `total`, ascending lex."""
    out: list[MultiIndex] = []

    def fill(prefix: tuple[int, ...], remaining: int, left: int):
        if left == 0:
            if remaining == 0:
                out.append(prefix)
            return
        if cap is None:
            lo, hi = (remaining, remaining) if left == 1 else (0, remaining)
        else:
            hi = min(cap, remaining)
            lo = max(0, remaining - cap * (left - 1))
        for a in range(lo, hi + 1):
            fill(prefix + (a,), remaining - a, left - 1)

    if total >= 0:
        fill((), total, slots)
    return tuple(out)


@functools.lru_cache(maxsize=None)
def component_basis(s: int, trunc: Truncation, spec: RootSpec) -> tuple[MultiIndex, ...]:
    """Monomial basis of the degree-s component, in ascending lexicographic order."""
    cap = trunc.cap(spec)
    if s < 0:
        raise DegreeOutOfRangeError(f"degree {s} is negative")
    if cap is not None and s > trunc.n * cap:
        raise DegreeOutOfRangeError(
            f"degree {s} exceeds the top degree {trunc.n * cap} of the truncation"
        )
    return bounded_compositions(s, trunc.n, cap)
