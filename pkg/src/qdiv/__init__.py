"""qdiv: exact computations in quantum divided power algebras at a root of unity.

The package computes, over the exact cyclotomic field Q(zeta_N):

* q-binomial arithmetic and its root-of-unity factorization (`qarith`),
* the quantum divided power algebra, its truncations and module structure
  over the restricted quantum group u_q(sl_n) (`dpalgebra`, `uqaction`),
* energy filtrations, socles, rigidity and indecomposability certificates
  (`loewy`, `uqaction`),
* the quantum de Rham complex and its exact cohomology (`derham`).

A CLI (`qdiv`) exposes the reports in table/json/csv form and can render
matplotlib figures of the dimension data.
"""

from __future__ import annotations

from .cyclotomic import CycScalar, RootSpec, cyclotomic_poly
from .derham import FormVector, cohomology, untruncated_exactness
from .dpalgebra import ModVector, Truncation, component_basis, multiply
from .loewy import (
    EnergyProfile,
    e_bounds,
    edeg,
    loewy_filtration,
    rigidity_check,
    socle_basis,
    socle_generators,
)
from .qarith import char_of_q, dim_by_gaussian, lusztig_factor, q_binomial, q_int
from .uqaction import (
    component_space,
    indecomposability_certificate,
    simplicity_certificate,
    socle_oracle,
    submodule_closure,
)

__all__ = [
    "CycScalar",
    "RootSpec",
    "cyclotomic_poly",
    "FormVector",
    "cohomology",
    "untruncated_exactness",
    "ModVector",
    "Truncation",
    "component_basis",
    "multiply",
    "EnergyProfile",
    "e_bounds",
    "edeg",
    "loewy_filtration",
    "rigidity_check",
    "socle_basis",
    "socle_generators",
    "char_of_q",
    "dim_by_gaussian",
    "lusztig_factor",
    "q_binomial",
    "q_int",
    "component_space",
    "indecomposability_certificate",
    "simplicity_certificate",
    "socle_oracle",
    "submodule_closure",
]
