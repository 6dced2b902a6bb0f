"""q-integers, Gaussian binomials and their root-of-unity factorization.

Everything is evaluated exactly in Q(zeta_N).  The Gaussian binomial is
available through two independent routes (a division-free recursion evaluated
at q, and the symbolic Laurent product over Z[v, v^-1] specialized at q) so
each can serve as an oracle for the other.
"""

from __future__ import annotations

import functools
import math

from .cyclotomic import CycScalar, RootSpec
from .errors import InvariantViolationError


def q_int(n: int, spec: RootSpec) -> CycScalar:
    """The balanced q-integer [n] = q^(n-1) + q^(n-3) + ... + q^(1-n), n >= 0.

    [0] = 0 and [1] = 1.
    """
    if n < 0:
        raise ValueError("q_int is defined here for n >= 0")
    acc = spec.zero
    for i in range(n):
        acc = acc + spec.q_power(n - 1 - 2 * i)
    return acc


def q_factorial(n: int, spec: RootSpec) -> CycScalar:
    """[n]! = [n][n-1]...[1], with [0]! = 1."""
    if n < 0:
        raise ValueError("q_factorial is defined for n >= 0")
    acc = spec.one
    for i in range(2, n + 1):
        acc = acc * q_int(i, spec)
    return acc


def char_of_q(spec: RootSpec) -> int:
    """Least positive integer with vanishing q-integer; equals spec.ell."""
    k = 1
    while True:
        if q_int(k, spec).is_zero():
            return k
        k += 1
        if k > 2 * spec.N + 1:
            raise InvariantViolationError("no vanishing q-integer found below 2N")


# -- Laurent polynomials over Z, used only for the symbolic product route ---


def _laurent_mul(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in a.items():
        for j, y in b.items():
            k = i + j
            c = out.get(k, 0) + x * y
            if c:
                out[k] = c
            elif k in out:
                del out[k]
    return out


def _laurent_divexact(num: dict[int, int], den: dict[int, int]) -> dict[int, int]:
    """Exact division in Z[v, v^-1]; raises if the quotient is not Laurent."""
    if not den:
        raise ZeroDivisionError("division by the zero Laurent polynomial")
    if not num:
        return {}
    noff = min(num)
    doff = min(den)
    ncoef = [0] * (max(num) - noff + 1)
    for k, c in num.items():
        ncoef[k - noff] = c
    dcoef = [0] * (max(den) - doff + 1)
    for k, c in den.items():
        dcoef[k - doff] = c
    dn = len(dcoef) - 1
    if len(ncoef) - 1 < dn:
        raise ValueError("Laurent division is not exact")
    quot = [0] * (len(ncoef) - dn)
    for k in range(len(quot) - 1, -1, -1):
        c, r = divmod(ncoef[dn + k], dcoef[dn])
        if r:
            raise ValueError("Laurent division is not exact")
        quot[k] = c
        if c:
            for j, dj in enumerate(dcoef):
                ncoef[k + j] -= c * dj
    if any(ncoef):
        raise ValueError("Laurent division leaves a remainder")
    shift = noff - doff
    return {k + shift: c for k, c in enumerate(quot) if c}


def _laurent_eval(p: dict[int, int], spec: RootSpec) -> CycScalar:
    acc = spec.zero
    for k in sorted(p):
        acc = acc + p[k] * spec.q_power(k)
    return acc


def _vpow_minus_inverse(k: int) -> dict[int, int]:
    """v^k - v^-k as a Laurent polynomial."""
    if k == 0:
        return {}
    return {k: 1, -k: -1}


def q_binomial_by_product(m: int, r: int, spec: RootSpec) -> CycScalar:
    """Gaussian binomial [m r] via the symbolic product over Z[v, v^-1].

    prod_{i=1..r} (v^(m-i+1) - v^(-m+i-1)) / (v^i - v^-i), computed by exact
    Laurent division *before* specializing v -> q, so root-of-unity zeros in
    the denominator never arise.
    """
    if r < 0:
        return spec.zero
    if m < 0:
        sign = -1 if r % 2 else 1
        return sign * q_binomial_by_product(-m + r - 1, r, spec)
    if m < r:
        return spec.zero
    num: dict[int, int] = {0: 1}
    den: dict[int, int] = {0: 1}
    for i in range(1, r + 1):
        num = _laurent_mul(num, _vpow_minus_inverse(m - i + 1))
        den = _laurent_mul(den, _vpow_minus_inverse(i))
    return _laurent_eval(_laurent_divexact(num, den), spec)


@functools.lru_cache(maxsize=None)
def q_binomial(m: int, r: int, spec: RootSpec) -> CycScalar:
    """Gaussian binomial [m r] at q, for any integers m, r.

    Rules: [m r] = 0 for r < 0; [m r] = (-1)^r [-m+r-1 r] for m < 0;
    [m r] = 0 for 0 <= m < r; otherwise the Pascal-type recursion
    [n r] = q^(r-n) [n-1 r-1] + q^r [n-1 r], which needs no division.
    """
    if r < 0:
        return spec.zero
    if m < 0:
        sign = -1 if r % 2 else 1
        return sign * q_binomial(-m + r - 1, r, spec)
    if m < r:
        return spec.zero
    if r == 0 or r == m:
        return spec.one
    return spec.q_power(r - m) * q_binomial(m - 1, r - 1, spec) + spec.q_power(
        r
    ) * q_binomial(m - 1, r, spec)


def lusztig_factor(m: int, r: int, spec: RootSpec) -> CycScalar:
    """[m r] computed from its root-of-unity factorization, 0 <= r <= m.

    Writing m = m0 + m1*ell and r = r0 + r1*ell with 0 <= m0, r0 < ell:
    odd order:  [m r] = [m0 r0] * binomial(m1, r1);
    even order: the same product times (-1)^((m1+1)*r1*ell + m0*r1 - r0*m1).
    """
    if not 0 <= r <= m:
        raise ValueError("lusztig_factor needs 0 <= r <= m")
    ell = spec.ell
    m0, m1 = m % ell, m // ell
    r0, r1 = r % ell, r // ell
    small = q_binomial(m0, r0, spec)
    big = math.comb(m1, r1) if r1 <= m1 else 0
    out = small * big
    if spec.order == "even":
        exp = (m1 + 1) * r1 * ell + m0 * r1 - r0 * m1
        if exp % 2:
            out = -out
    return out


def _poly_power_coeffs(b: int, n: int) -> list[int]:
    """Coefficients of (1 + t + ... + t^(b-1))^n."""
    acc = [1]
    block = [1] * b
    for _ in range(n):
        out = [0] * (len(acc) + b - 1)
        for i, c in enumerate(acc):
            if c:
                for j in range(b):
                    out[i + j] += c
        acc = out
    return acc if n > 0 else [1]


def dim_by_alternating_sum(n: int, b: int, s: int) -> int:
    """Number of n-tuples in [0, b-1] summing to s, by inclusion-exclusion."""
    if n < 1 or b < 1:
        raise ValueError("need n >= 1 and b >= 1")
    if s < 0 or s > n * (b - 1):
        return 0
    out = 0
    for i in range(0, s // b + 1):
        top = n + s - i * b - 1
        term = math.comb(n, i) * (math.comb(top, n - 1) if top >= n - 1 else 0)
        out += term if i % 2 == 0 else -term
    return out


def dim_by_gaussian(n: int, b: int, s: int) -> int:
    """Number of n-tuples of integers in [0, b-1] summing to s.

    Evaluated two independent ways (coefficient of t^s in the polynomial power
    and the inclusion-exclusion alternating sum); both must agree.
    """
    if n < 1 or b < 1:
        raise ValueError("need n >= 1 and b >= 1")
    if s < 0 or s > n * (b - 1):
        return 0
    coeffs = _poly_power_coeffs(b, n)
    by_poly = coeffs[s]
    by_sum = dim_by_alternating_sum(n, b, s)
    if by_poly != by_sum:
        raise InvariantViolationError(
            f"dimension strategies disagree: poly={by_poly} sum={by_sum} at (n={n}, b={b}, s={s})"
        )
    return by_poly
