"""Exact symmetric-polynomial computations for root-of-unity wheel conditions."""

from .cycfield import CycField, CycNum, cyclotomic_polynomial
from .partitions import (
    Partition,
    SlimDecomposition,
    compare_dominance,
    compare_lex,
    enumerate_partitions,
    partitions_of_weight,
)
from .polyring import MPoly, SymPoly, monomial_sym, vandermonde
from .specialpolys import (
    NormalizationPoleError,
    NonGenericParametersError,
    hall_littlewood,
    macdonald_operator,
    macdonald_poly,
    verify_eigen,
)
from .wheel import WheelSpec, dimension_oracle, find_violation, is_member, kernel_basis
from .dualspace import EElement, complement_dimension, epsilon, pairing, straighten
from .frobenius import (
    ProductBasisElement,
    build_basis,
    frobenius_map,
    in_frobenius_image,
    split_by_slim,
    verify_basis,
)
from .charseries import CharSeries, b_n_formula, chi_k2, chi_kr, compare_with_oracle

__all__ = [
    "CycField",
    "CycNum",
    "cyclotomic_polynomial",
    "Partition",
    "SlimDecomposition",
    "compare_dominance",
    "compare_lex",
    "enumerate_partitions",
    "partitions_of_weight",
    "MPoly",
    "SymPoly",
    "monomial_sym",
    "vandermonde",
    "NormalizationPoleError",
    "NonGenericParametersError",
    "hall_littlewood",
    "macdonald_operator",
    "macdonald_poly",
    "verify_eigen",
    "WheelSpec",
    "dimension_oracle",
    "find_violation",
    "is_member",
    "kernel_basis",
    "EElement",
    "complement_dimension",
    "epsilon",
    "pairing",
    "straighten",
    "ProductBasisElement",
    "build_basis",
    "frobenius_map",
    "in_frobenius_image",
    "split_by_slim",
    "verify_basis",
    "CharSeries",
    "b_n_formula",
    "chi_k2",
    "chi_kr",
    "compare_with_oracle",
]

__version__ = "0.1.0"
