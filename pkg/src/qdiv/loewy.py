"""Energy filtration, socle combinatorics and Loewy structure of components.

Every exponent tuple splits into quotient and remainder by the order of the
root of unity: alpha_i = ell * kappa_i + rho_i with 0 <= rho_i < ell.  The
total quotient sum("energy degree") filters each graded component by
coordinate subspaces that are stable under the whole Chevalley action.  This
module computes that filtration, identifies each layer as a multiplicity of
one simple component of the minimally truncated algebra, exhibits socle and
layer generators, and certifies that the socle and radical series both land
exactly on the energy filtration (rigidity).
"""

from __future__ import annotations

import dataclasses

from .cyclotomic import RootSpec
from .dpalgebra import (
    ModVector,
    MultiIndex,
    Truncation,
    bounded_compositions,
    component_basis,
)
from .errors import (
    DegreeOutOfRangeError,
    InvariantViolationError,
    ZeroVectorError,
)
from .linalg import EchelonBasis, Subspace
from .qarith import dim_by_gaussian
from .uqaction import ComponentSpace, component_space, submodule_closure


@dataclasses.dataclass(frozen=True)
class EnergyProfile:
    """Axis-wise quotients and remainders of an exponent tuple by ell."""

    per_axis: tuple[int, ...]
    residue: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(self.per_axis)

    def dominates(self, other: "EnergyProfile") -> bool:
        return all(a >= b for a, b in zip(self.per_axis, other.per_axis))


def edeg(alpha: MultiIndex, spec: RootSpec) -> EnergyProfile:
    """Energy profile of a single exponent tuple."""
    if any(a < 0 for a in alpha):
        raise DegreeOutOfRangeError(f"negative exponent in {alpha}")
    ell = spec.ell
    return EnergyProfile(
        per_axis=tuple(a // ell for a in alpha),
        residue=tuple(a % ell for a in alpha),
    )


def edeg_vector(v: ModVector, spec: RootSpec) -> int:
    """Largest total energy over the monomials of a nonzero vector."""
    if not v.terms:
        raise ZeroVectorError("the zero vector has no energy degree")
    return max(edeg(alpha, spec).total for alpha in v.terms)


def _check_degree(s: int, trunc: Truncation, spec: RootSpec) -> None:
    top = trunc.total_degree(spec)
    if s < 0 or (top is not None and s > top):
        raise DegreeOutOfRangeError(
            f"degree {s} outside 0..{top} for this truncation"
        )


def _energy_range(s: int, trunc: Truncation, spec: RootSpec) -> tuple[int, int]:
    """Feasible min and max total energy in the degree-s component.

    Total energy k is attained exactly when k block units and a remainder of
    s - k*ell can both be distributed over n axes within their caps.
    """
    _check_degree(s, trunc, spec)
    n, m, ell = trunc.n, trunc.m, spec.ell
    feasible = [
        k
        for k in range(0, n * (m - 1) + 1)
        if 0 <= s - k * ell <= n * (ell - 1)
    ]
    if not feasible:
        raise InvariantViolationError(
            f"no feasible energy for degree {s}: the component should be empty"
        )
    return feasible[0], feasible[-1]


def e_bounds(s: int, trunc: Truncation, spec: RootSpec) -> tuple[int, int]:
    """Exact (min, max) total energy in the degree-s component, cap >= 2*ell."""
    if trunc.m < 2:
        raise ValueError("energy bounds need a truncation order m >= 2")
    return _energy_range(s, trunc, spec)


def e_bounds_bruteforce(s: int, trunc: Truncation, spec: RootSpec) -> tuple[int, int]:
    """(min, max) total energy by enumerating every monomial of the component."""
    totals = [edeg(alpha, spec).total for alpha in component_basis(s, trunc, spec)]
    if not totals:
        raise InvariantViolationError(f"degree {s} component is empty")
    return min(totals), max(totals)


@dataclasses.dataclass(frozen=True)
class ClosedFormBounds:
    """Case analysis for the extreme energies, stated in closed form.

    Cases 1, 2 and 4 pin the maximal energy exactly; case 3 pins the minimal
    energy and brackets the maximal one (the bracket collapses once the
    minimum is large enough).  `exact` records whether e_lo == e_hi.
    """

    case: int
    e_min: int
    e_lo: int
    e_hi: int

    @property
    def exact(self) -> bool:
        return self.e_lo == self.e_hi


def _small_degree_max_energy(s: int, n: int, ell: int) -> int:
    """Closed-form maximal energy for 0 <= s <= n*(ell-1).

    Every way of writing s = j*(ell-1) + h with 1 <= j <= n and
    0 <= h <= ell-1 must give the same value; disagreement would falsify
    the closed form, so it is raised as an invariant violation.
    """
    if s <= ell - 1:
        return 0
    values = set()
    for j in range(1, n + 1):
        h = s - j * (ell - 1)
        if 0 <= h <= ell - 1:
            j_hi, j_lo = divmod(j, ell)
            values.add(j - j_hi - (1 if h < j_lo else 0))
    if len(values) != 1:
        raise InvariantViolationError(
            f"inconsistent closed-form energies {sorted(values)} at degree {s}"
        )
    return values.pop()


def e_bounds_closed_form(s: int, trunc: Truncation, spec: RootSpec) -> ClosedFormBounds:
    """Four-case closed-form statement of the extreme energies."""
    if trunc.m < 2:
        raise ValueError("energy bounds need a truncation order m >= 2")
    _check_degree(s, trunc, spec)
    n, m, ell = trunc.n, trunc.m, spec.ell
    top = n * (m * ell - 1)
    if s <= ell - 1:
        return ClosedFormBounds(1, 0, 0, 0)
    if s <= n * (ell - 1):
        e = _small_degree_max_energy(s, n, ell)
        return ClosedFormBounds(2, 0, e, e)
    if s >= top - (ell - 1):
        full = n * (m - 1)
        return ClosedFormBounds(4, full, full, full)
    k, _ = divmod(s - (n - 1) * (ell - 1), ell)
    cap_total = n * (m - 1)
    gain_full = _small_degree_max_energy(n * (ell - 1), n, ell)
    if k > cap_total - gain_full:
        return ClosedFormBounds(3, k, cap_total, cap_total)
    gain_part = _small_degree_max_energy((n - 1) * (ell - 1), n, ell)
    return ClosedFormBounds(3, k, k + gain_part, k + gain_full)


def staircase(s: int, n: int, ell: int) -> MultiIndex:
    """Front-loaded exponent tuple of degree s with entries below ell.

    Fills ell-1 into leading axes and the remainder into the next axis:
    the canonical highest-weight monomial shape of a simple component.
    """
    if not 0 <= s <= n * (ell - 1):
        raise DegreeOutOfRangeError(f"degree {s} outside 0..{n * (ell - 1)}")
    full, part = divmod(s, ell - 1)
    out = [ell - 1] * full + ([part] if part else [])
    out += [0] * (n - len(out))
    return tuple(out)


def layer_generators(
    s: int, energy: int, trunc: Truncation, spec: RootSpec
) -> tuple[MultiIndex, ...]:
    """Generator exponents of the given energy layer: block tuple plus staircase."""
    n, m, ell = trunc.n, trunc.m, spec.ell
    eta = staircase(s - energy * ell, n, ell)
    out = []
    for kappa in bounded_compositions(energy, n, m - 1):
        out.append(tuple(ell * k + e for k, e in zip(kappa, eta)))
    return tuple(out)


def socle_generators(s: int, trunc: Truncation, spec: RootSpec) -> tuple[MultiIndex, ...]:
    """Generator exponents of the socle (the minimal-energy layer)."""
    e_min, _ = _energy_range(s, trunc, spec)
    return layer_generators(s, e_min, trunc, spec)


def socle_basis(s: int, trunc: Truncation, spec: RootSpec) -> tuple[MultiIndex, ...]:
    """All monomials of minimal total energy in the degree-s component."""
    e_min, _ = _energy_range(s, trunc, spec)
    return tuple(
        alpha
        for alpha in component_basis(s, trunc, spec)
        if edeg(alpha, spec).total == e_min
    )


@dataclasses.dataclass(frozen=True)
class LayerInfo:
    """One layer of the energy filtration, bottom up."""

    index: int
    energy: int
    layer_degree: int
    staircase: MultiIndex
    multiplicity: int
    simple_dim: int
    monomial_count: int
    generators: tuple[MultiIndex, ...]


@dataclasses.dataclass(frozen=True)
class FiltrationReport:
    """Energy filtration of one graded component with per-layer structure."""

    s: int
    n: int
    m: int
    ell: int
    order: str
    e_min: int
    e_max: int
    layers: tuple[LayerInfo, ...]
    total_dim: int
    cumulative_dims: tuple[int, ...]

    @property
    def loewy_length(self) -> int:
        return self.e_max - self.e_min + 1


def _unit_subspace(indices, dim: int, spec: RootSpec) -> Subspace:
    one = spec.one
    return Subspace.from_vectors(spec.field, dim, ({j: one} for j in indices))


def _energy_of_rows(comp: ComponentSpace) -> list[int]:
    return [edeg(alpha, comp.spec).total for alpha in comp.basis]


def _verify_energy_monotone(comp: ComponentSpace) -> None:
    """Nonzero generator terms never raise any axis-wise energy."""
    profiles = [edeg(alpha, comp.spec).per_axis for alpha in comp.basis]
    for g in comp.gens:
        for j in range(comp.dim):
            hit = comp.one_term(g, j)
            if hit is None:
                continue
            target, _ = hit
            if any(t > s for t, s in zip(profiles[target], profiles[j])):
                raise InvariantViolationError(
                    f"{g} raises the energy of {comp.basis[j]}"
                )


def _verify_layer_generation(
    comp: ComponentSpace, layer_rows: list[list[int]], gens_by_layer
) -> None:
    """Each layer's generators, over the part below, span the whole layer."""
    field = comp.spec.field
    one = comp.spec.one
    below: list[int] = []
    for rows, gens in zip(layer_rows, gens_by_layer):
        closure = submodule_closure(
            ({comp.index_of[eta]: one} for eta in gens), comp
        )
        ech = EchelonBasis(field)
        for j in below:
            ech.insert({j: one})
        for row in closure.rows:
            ech.insert(dict(row))
        below = below + rows
        if ech.rank != len(below):
            raise InvariantViolationError(
                "layer generators fail to span their filtration step"
            )
        if any(not ech.contains({j: one}) for j in rows):
            raise InvariantViolationError(
                "layer generators fail to reach a layer monomial"
            )


def _verify_primitives(
    comp: ComponentSpace, energies: list[int], gens: tuple[MultiIndex, ...], e: int
) -> None:
    """Raising operators push layer generators strictly down the filtration."""
    for eta in gens:
        j = comp.index_of[eta]
        for g in comp.gens:
            if g.kind != "e":
                continue
            hit = comp.one_term(g, j)
            if hit is not None and energies[hit[0]] > e - 1:
                raise InvariantViolationError(
                    f"{g} does not lower the filtration level of {eta}"
                )


def loewy_filtration(
    s: int, trunc: Truncation, spec: RootSpec, verify: bool = True
) -> FiltrationReport:
    """Energy filtration report, verified layer by layer.

    With verify on, checks that nonzero generator terms never raise the
    axis-wise energy (so every filtration step is a submodule), that each
    layer count factors as multiplicity times the matching simple dimension,
    that the layer generators span their step and are primitive.
    """
    e_min, e_max = _energy_range(s, trunc, spec)
    n, m, ell = trunc.n, trunc.m, spec.ell
    comp = component_space(s, trunc, spec)
    energies = _energy_of_rows(comp)

    layers: list[LayerInfo] = []
    layer_rows: list[list[int]] = []
    cumulative: list[int] = []
    seen = 0
    for i, e in enumerate(range(e_min, e_max + 1)):
        rows = [j for j, val in enumerate(energies) if val == e]
        gens = layer_generators(s, e, trunc, spec)
        layer_degree = s - e * ell
        info = LayerInfo(
            index=i,
            energy=e,
            layer_degree=layer_degree,
            staircase=staircase(layer_degree, n, ell),
            multiplicity=len(gens),
            simple_dim=dim_by_gaussian(n, ell, layer_degree),
            monomial_count=len(rows),
            generators=gens,
        )
        layers.append(info)
        layer_rows.append(rows)
        seen += len(rows)
        cumulative.append(seen)

    report = FiltrationReport(
        s=s,
        n=n,
        m=m,
        ell=ell,
        order=spec.order,
        e_min=e_min,
        e_max=e_max,
        layers=tuple(layers),
        total_dim=comp.dim,
        cumulative_dims=tuple(cumulative),
    )

    if report.total_dim != sum(info.monomial_count for info in layers):
        raise InvariantViolationError("layers do not partition the component")
    for info in layers:
        if info.multiplicity != dim_by_gaussian(n, m, info.energy):
            raise InvariantViolationError(
                f"layer {info.index} multiplicity disagrees with its generating function"
            )
        if info.monomial_count != info.multiplicity * info.simple_dim:
            raise InvariantViolationError(
                f"layer {info.index} does not factor as multiplicity x simple"
            )
        if any(edeg(eta, spec).total != info.energy for eta in info.generators):
            raise InvariantViolationError(
                f"layer {info.index} generator has the wrong energy"
            )

    if verify:
        _verify_energy_monotone(comp)
        _verify_layer_generation(comp, layer_rows, [f.generators for f in layers])
        for info in layers[1:]:
            _verify_primitives(comp, energies, info.generators, info.energy)
    return report


@dataclasses.dataclass(frozen=True)
class IdentityReport:
    """Dimension bookkeeping: component dimension against the layer sum."""

    s: int
    total_dim: int
    terms: tuple[tuple[int, int, int], ...]
    layer_sum: int

    @property
    def ok(self) -> bool:
        return self.total_dim == self.layer_sum


def identity_check(s: int, trunc: Truncation, spec: RootSpec) -> IdentityReport:
    """Component dimension equals the sum of multiplicity x simple over layers.

    Each multiplicity is computed twice: as a generating function coefficient
    and by direct enumeration of block tuples.
    """
    e_min, e_max = _energy_range(s, trunc, spec)
    n, m, ell = trunc.n, trunc.m, spec.ell
    terms = []
    for e in range(e_min, e_max + 1):
        mult = dim_by_gaussian(n, m, e)
        if mult != len(bounded_compositions(e, n, m - 1)):
            raise InvariantViolationError(
                f"multiplicity at energy {e} disagrees with enumeration"
            )
        simple = dim_by_gaussian(n, ell, s - e * ell)
        terms.append((e, mult, simple))
    total = dim_by_gaussian(n, m * ell, s)
    return IdentityReport(
        s=s,
        total_dim=total,
        terms=tuple(terms),
        layer_sum=sum(mult * simple for _, mult, simple in terms),
    )


@dataclasses.dataclass(frozen=True)
class RigidityReport:
    """Socle and radical series compared against the energy filtration."""

    s: int
    loewy_length: int
    filtration_dims: tuple[int, ...]
    socle_dims: tuple[int, ...]
    radical_dims: tuple[int, ...]
    socle_matches: bool
    radical_matches: bool

    @property
    def ok(self) -> bool:
        return self.socle_matches and self.radical_matches


def rigidity_check(s: int, trunc: Truncation, spec: RootSpec) -> RigidityReport:
    """Certify that both structural series land on the energy filtration.

    The k-th socle must equal the k-th filtration step from the bottom and
    the k-th radical power the k-th step from the top, as exact subspaces.
    """
    report = loewy_filtration(s, trunc, spec, verify=False)
    comp = component_space(s, trunc, spec)
    energies = _energy_of_rows(comp)
    steps = []
    for e in range(report.e_min, report.e_max + 1):
        rows = [j for j, val in enumerate(energies) if val <= e]
        steps.append(_unit_subspace(rows, comp.dim, spec))

    soc = comp.socle_series()
    rad = comp.radical_series()
    length = report.loewy_length

    socle_ok = len(soc) == length and all(
        soc[k] == steps[k] for k in range(length)
    )
    radical_ok = (
        len(rad) == length + 1
        and rad[length].dim == 0
        and all(rad[length - 1 - k] == steps[k] for k in range(length))
    )
    return RigidityReport(
        s=s,
        loewy_length=length,
        filtration_dims=tuple(sub.dim for sub in steps),
        socle_dims=tuple(sub.dim for sub in soc),
        radical_dims=tuple(sub.dim for sub in rad),
        socle_matches=socle_ok,
        radical_matches=radical_ok,
    )


@dataclasses.dataclass(frozen=True)
class ReachabilityReport:
    """Pairwise closure comparisons predicted by the energy profiles."""

    s: int
    equal_profile_pairs: int
    dominated_pairs: int
    incomparable_pairs: int

    @property
    def checked_pairs(self) -> int:
        return self.equal_profile_pairs + self.dominated_pairs + self.incomparable_pairs


def reachability_tests(s: int, trunc: Truncation, spec: RootSpec) -> ReachabilityReport:
    """Verify closure containments against energy-profile comparisons.

    Equal profiles force equal closures.  Axis-wise domination with strictly
    larger total forces strict containment.  Distinct profiles of equal total
    force mutual non-membership of the defining monomials.
    """
    comp = component_space(s, trunc, spec)
    one = spec.one
    profiles = [edeg(alpha, comp.spec) for alpha in comp.basis]
    closures = [
        submodule_closure([{j: one}], comp) for j in range(comp.dim)
    ]
    equal = dominated = incomparable = 0
    for a in range(comp.dim):
        for b in range(comp.dim):
            if a == b:
                continue
            pa, pb = profiles[a], profiles[b]
            if pa.per_axis == pb.per_axis:
                if a < b:
                    if closures[a] != closures[b]:
                        raise InvariantViolationError(
                            f"equal profiles, unequal closures: "
                            f"{comp.basis[a]} vs {comp.basis[b]}"
                        )
                    equal += 1
            elif pa.dominates(pb) and pa.total > pb.total:
                if not (
                    closures[b].is_subspace_of(closures[a])
                    and closures[b].dim < closures[a].dim
                ):
                    raise InvariantViolationError(
                        f"domination without strict containment: "
                        f"{comp.basis[a]} vs {comp.basis[b]}"
                    )
                dominated += 1
            elif pa.total == pb.total and a < b:
                if closures[b].contains({comp.index_of[comp.basis[a]]: one}):
                    raise InvariantViolationError(
                        f"unexpected reachability: {comp.basis[a]} "
                        f"from {comp.basis[b]}"
                    )
                if closures[a].contains({comp.index_of[comp.basis[b]]: one}):
                    raise InvariantViolationError(
                        f"unexpected reachability: {comp.basis[b]} "
                        f"from {comp.basis[a]}"
                    )
                incomparable += 1
    return ReachabilityReport(
        s=s,
        equal_profile_pairs=equal,
        dominated_pairs=dominated,
        incomparable_pairs=incomparable,
    )


def layer_action(s: int, trunc: Truncation, spec: RootSpec, energy: int):
    """Generator matrices of one energy layer, acting on its own monomials.

    Returns (action dict, layer monomials).  Entries whose target leaves the
    layer are dropped: this is the subquotient action.
    """
    comp = component_space(s, trunc, spec)
    energies = _energy_of_rows(comp)
    rows = [j for j, val in enumerate(energies) if val == energy]
    if not rows:
        raise DegreeOutOfRangeError(f"no monomials of energy {energy}")
    local = {j: k for k, j in enumerate(rows)}
    action = {}
    for g in comp.gens:
        mats: list[dict] = [{} for _ in rows]
        for j in rows:
            hit = comp.one_term(g, j)
            if hit is None:
                continue
            target, coeff = hit
            if target in local:
                mats[local[target]][local[j]] = coeff
        action[g] = mats
    return action, tuple(comp.basis[j] for j in rows)
