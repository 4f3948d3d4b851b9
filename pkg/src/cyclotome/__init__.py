"""Affine-invariant extended cyclic codes, duadic codes and the quantum codes built from them."""

from __future__ import annotations

from .config import DEFAULT_BUDGET, Budget
from .cyclic import (CyclicCode, DefiningSet, ExtendedCode, LinearCode, code_from_defining_set,
                     cyclic_code, dual_defining_set, extend, hermitian_dual_defining_set)
from .cyclotomic import (CosetPartition, Splitting, all_cosets, cyclotomic_coset, find_splittings,
                         is_square_mod, mult_order, precedes)
from .distance import DistanceResult, min_distance, min_distance_by, min_weight_outside
from .errors import CyclotomeError
from .field import FieldElement, FieldSpec, Poly, make_field, minimal_polynomial, primitive_element
from .affine import (AffineClassification, dual_contained_maximal, extended_defining_set,
                     is_affine_invariant, is_affine_invariant_oracle, maximal_affine_invariant_codes)
from .quantum import (QuantumCodeRecord, affine_quantum_family, css_construct,
                      degenerate_duadic_family, duadic_quantum, hermitian_construct, singleton_check)

__version__ = "0.1.0"

__all__ = [
    "AffineClassification",
    "Budget",
    "CosetPartition",
    "CyclicCode",
    "CyclotomeError",
    "DEFAULT_BUDGET",
    "DefiningSet",
    "DistanceResult",
    "ExtendedCode",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "Poly",
    "QuantumCodeRecord",
    "Splitting",
    "affine_quantum_family",
    "all_cosets",
    "annotations",
    "code_from_defining_set",
    "css_construct",
    "cyclic_code",
    "cyclotomic_coset",
    "degenerate_duadic_family",
    "duadic_quantum",
    "dual_contained_maximal",
    "dual_defining_set",
    "extend",
    "extended_defining_set",
    "find_splittings",
    "hermitian_construct",
    "hermitian_dual_defining_set",
    "is_affine_invariant",
    "is_affine_invariant_oracle",
    "is_square_mod",
    "make_field",
    "maximal_affine_invariant_codes",
    "min_distance",
    "min_distance_by",
    "min_weight_outside",
    "minimal_polynomial",
    "mult_order",
    "precedes",
    "primitive_element",
    "singleton_check",
]
