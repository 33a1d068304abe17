"""Cyclic division algebras over Q and the Weyl-group cosets they can represent.

The package is built from small exact layers:

* :mod:`numberfield` -- cyclic Galois fields with an explicit generator ``sigma``
* :mod:`matrixnf` -- matrices over those fields, characteristic/minimal polynomials
* :mod:`cyclicalg` -- the algebras ``(K/Q, sigma, a)`` and their regular representation
* :mod:`brauer` -- Hilbert symbols, local invariants, root-of-unity obstructions
* :mod:`permcycle` -- cycle types in ``S_d`` and the exclusion census
* :mod:`weyl` -- which cosets ``D^x`` and ``SL_1(D)`` represent
* :mod:`cli` -- JSON reports on the command line
"""

from .brauer import InvariantVector, hilbert_symbol, invariant_checks, oo, quaternion_invariants
from .cyclicalg import AlgElement, CyclicAlgebra, Division, is_division, reduced_norm, regular_rep
from .numberfield import (NFElement, NormStatus, NumberField, cyclotomic_field, custom_field,
                          gaussian_period_field, is_galois_norm, quadratic_field)
from .permcycle import CycleType, Permutation, census, classify_cycle_type
from .weyl import Group, coset_report, phi, weyl_subgroup_Dx, weyl_subgroup_SL1

__version__ = "0.1.0"

__all__ = [
    "AlgElement", "CycleType", "CyclicAlgebra", "Division", "Group", "InvariantVector",
    "NFElement", "NormStatus", "NumberField", "Permutation", "census", "classify_cycle_type",
    "coset_report", "custom_field", "cyclotomic_field", "gaussian_period_field",
    "hilbert_symbol", "invariant_checks", "is_division", "is_galois_norm", "oo", "phi",
    "quadratic_field", "quaternion_invariants", "reduced_norm", "regular_rep",
    "weyl_subgroup_Dx", "weyl_subgroup_SL1",
]
