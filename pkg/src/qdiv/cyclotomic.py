"""Exact arithmetic in cyclotomic fields Q(zeta_N).

Scalars are residues modulo the N-th cyclotomic polynomial, stored as an
integer coefficient vector over the power basis 1, zeta, ..., zeta^(phi(N)-1)
together with a single positive denominator.  All operations are exact; there
is no floating point anywhere.

`RootSpec` fixes the root of unity q used throughout the package: either a
primitive ell-th root with ell odd ("odd" order, N = ell) or a primitive
2*ell-th root ("even" order, N = 2*ell).
"""

from __future__ import annotations

import dataclasses
import functools
import math
from fractions import Fraction


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def _poly_divexact(num: list[int], den: list[int]) -> list[int]:
    """Exact quotient of integer polynomials (raises if not exact)."""
    num = list(num)
    dn = len(den) - 1
    while len(den) > 1 and den[-1] == 0:
        raise ValueError("denominator has zero leading coefficient")
    quot = [0] * (len(num) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(num[dn + k], den[dn])
        if r:
            raise ValueError("polynomial division is not exact")
        quot[k] = c
        if c:
            for j, dj in enumerate(den):
                num[k + j] -= c * dj
    if any(num):
        raise ValueError("polynomial division leaves a remainder")
    return quot


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree.

    Computed by dividing x^n - 1 by the cyclotomic polynomials of the proper
    divisors of n; every step is exact integer arithmetic.

    >>> cyclotomic_poly(1)
    (-1, 1)
    >>> cyclotomic_poly(3)
    (1, 1, 1)
    >>> cyclotomic_poly(6)
    (1, -1, 1)
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    den = [1]
    for d in range(1, n):
        if n % d == 0:
            den = _poly_mul(den, list(cyclotomic_poly(d)))
    return tuple(_poly_divexact(num, den))


class CyclotomicField:
    """Q(zeta_n) with precomputed reduction data (one shared instance per n)."""

    __slots__ = ("n", "degree", "modulus", "_red", "zero", "one", "_zeta_pows")

    def __init__(self, n: int):
        self.n = n
        self.modulus = cyclotomic_poly(n)
        d = len(self.modulus) - 1
        self.degree = d
        # _red[k] = coefficient vector of zeta^(d+k) reduced mod the modulus
        red: list[tuple[int, ...]] = []
        cur = [-c for c in self.modulus[:d]]
        red.append(tuple(cur))
        for _ in range(d - 2):
            top = cur[d - 1]
            cur = [0] + cur[: d - 1]
            if top:
                base = red[0]
                for i in range(d):
                    cur[i] += top * base[i]
            red.append(tuple(cur))
        self._red = red
        self.zero = CycScalar(self, (0,) * d, 1)
        self.one = CycScalar(self, (1,) + (0,) * (d - 1), 1)
        pows = [self.one]
        for _ in range(n - 1):
            pows.append(pows[-1] * self._zeta())
        self._zeta_pows = pows

    def _zeta(self) -> "CycScalar":
        d = self.degree
        if d == 1:
            # Q(zeta_1) = Q(zeta_2) = Q; zeta is 1 or -1
            return CycScalar(self, ((1,) if self.n == 1 else (-1,)), 1)
        nums = [0] * d
        nums[1] = 1
        return CycScalar(self, tuple(nums), 1)

    def zeta_power(self, k: int) -> "CycScalar":
        return self._zeta_pows[k % self.n]

    def reduce(self, coeffs: list[int]) -> tuple[int, ...]:
        """Reduce an integer coefficient vector (degree < 2d-1) mod the modulus."""
        d = self.degree
        out = list(coeffs[:d]) + [0] * (d - len(coeffs))
        for k in range(d, len(coeffs)):
            c = coeffs[k]
            if c:
                row = self._red[k - d]
                for i in range(d):
                    out[i] += c * row[i]
        return tuple(out)

    def make(self, nums: tuple[int, ...] | list[int], den: int) -> "CycScalar":
        """Normalize (content gcd out, positive denominator) and wrap."""
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            nums = [-c for c in nums]
        g = den
        for c in nums:
            if c:
                g = math.gcd(g, c)
        if g > 1:
            nums = [c // g for c in nums]
            den //= g
        if not any(nums):
            return self.zero
        return CycScalar(self, tuple(nums), den)

    def from_fraction(self, value: Fraction | int) -> "CycScalar":
        f = Fraction(value)
        d = self.degree
        return self.make((f.numerator,) + (0,) * (d - 1), f.denominator)

    def inverse_of(self, x: "CycScalar") -> "CycScalar":
        """Multiplicative inverse via the extended Euclidean algorithm."""
        if not x.nums or not any(x.nums):
            raise ZeroDivisionError("inverse of zero cyclotomic scalar")
        # work over Q[t]: r0 = modulus, r1 = x's polynomial
        r0 = [Fraction(c) for c in self.modulus]
        r1 = [Fraction(c, x.den) for c in x.nums]
        s0: list[Fraction] = [Fraction(0)]
        s1: list[Fraction] = [Fraction(1)]

        def deg(p: list[Fraction]) -> int:
            for i in range(len(p) - 1, -1, -1):
                if p[i]:
                    return i
            return -1

        while True:
            d1 = deg(r1)
            if d1 < 0:
                raise ZeroDivisionError("scalar is not invertible (shares a factor with the modulus)")
            if d1 == 0:
                c = r1[0]
                inv = [si / c for si in s1]
                break
            d0 = deg(r0)
            if d0 < d1:
                r0, r1, s0, s1 = r1, r0, s1, s0
                continue
            lead = r0[d0] / r1[d1]
            shift = d0 - d1
            for i in range(d1 + 1):
                r0[i + shift] -= lead * r1[i]
            while len(s0) < len(s1) + shift:
                s0.append(Fraction(0))
            for i in range(len(s1)):
                s0[i + shift] -= lead * s1[i]
        den = 1
        for c in inv:
            den = den * c.denominator // math.gcd(den, c.denominator)
        nums = [int(c * den) for c in inv]
        nums = self.reduce(nums)
        return self.make(nums, den)


@functools.lru_cache(maxsize=None)
def field(n: int) -> CyclotomicField:
    return CyclotomicField(n)


class CycScalar:
    """An element of Q(zeta_N), immutable, with exact rational coordinates.

    Supports +, -, *, /, ** with other scalars of the same field and with
    int/Fraction values, which are coerced.  Rendered canonically as a reduced
    polynomial in z = zeta_N, e.g. '1/2 - 1/2*z'.
    """

    __slots__ = ("field", "nums", "den")

    def __init__(self, fld: CyclotomicField, nums: tuple[int, ...], den: int):
        self.field = fld
        self.nums = nums
        self.den = den

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not any(self.nums)

    def __bool__(self) -> bool:
        return any(self.nums)

    def is_rational(self) -> bool:
        return not any(self.nums[1:])

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.nums)

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return Fraction(self.nums[0], self.den)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "CycScalar | None":
        if isinstance(other, CycScalar):
            if other.field is self.field:
                return other
            if other.field.n == self.field.n:
                return CycScalar(self.field, other.nums, other.den)
            return None
        if isinstance(other, (int, Fraction)):
            return self.field.from_fraction(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        nums = [x * b.den + y * a.den for x, y in zip(a.nums, b.nums)]
        return self.field.make(nums, a.den * b.den)

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.field, tuple(-c for c in self.nums), self.den)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self, o
        if not any(a.nums) or not any(b.nums):
            return self.field.zero
        conv = [0] * (2 * self.field.degree - 1)
        for i, x in enumerate(a.nums):
            if x:
                for j, y in enumerate(b.nums):
                    if y:
                        conv[i + j] += x * y
        return self.field.make(self.field.reduce(conv), a.den * b.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycScalar":
        return self.field.inverse_of(self)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = self.field.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- identity ---------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            if other.field.n == self.field.n:
                return self.nums == other.nums and self.den == other.den
            if self.is_rational() and other.is_rational():
                return self.as_fraction() == other.as_fraction()
            return False
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.as_fraction() == Fraction(other)
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self.nums[0], self.den))
        return hash((self.field.n, self.nums, self.den))

    # -- rendering --------------------------------------------------------

    def render(self, symbol: str = "z") -> str:
        """Canonical string, ascending powers, reduced rational coefficients."""
        parts: list[str] = []
        for k, c in enumerate(self.nums):
            if not c:
                continue
            coeff = Fraction(c, self.den)
            mag = abs(coeff)
            if k == 0:
                body = str(mag)
            elif mag == 1:
                body = symbol if k == 1 else f"{symbol}^{k}"
            else:
                body = f"{mag}*{symbol}" if k == 1 else f"{mag}*{symbol}^{k}"
            if not parts:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"CycScalar({self.render()!r}, N={self.field.n})"


@dataclasses.dataclass(frozen=True)
class RootSpec:
    """Choice of the root of unity q.

    order "odd":  q = zeta_ell with ell odd (N = ell)
    order "even": q = zeta_(2*ell)          (N = 2*ell)

    Either way ell is the least positive integer with q-integer [ell] = 0.
    """

    ell: int
    order: str = "odd"

    def __post_init__(self):
        if not isinstance(self.ell, int) or self.ell < 3:
            raise ValueError("ell must be an integer >= 3")
        if self.order not in ("odd", "even"):
            raise ValueError("order must be 'odd' or 'even'")
        if self.order == "odd" and self.ell % 2 == 0:
            raise ValueError("odd order requires odd ell")

    @property
    def N(self) -> int:
        return self.ell if self.order == "odd" else 2 * self.ell

    @property
    def field(self) -> CyclotomicField:
        return field(self.N)

    @property
    def zero(self) -> CycScalar:
        return self.field.zero

    @property
    def one(self) -> CycScalar:
        return self.field.one

    @property
    def q(self) -> CycScalar:
        return self.field.zeta_power(1)

    def q_power(self, k: int) -> CycScalar:
        """q^k for any integer k (negative powers wrap around the unit circle)."""
        return self.field.zeta_power(k)

    def scalar(self, value: int | Fraction) -> CycScalar:
        return self.field.from_fraction(value)
