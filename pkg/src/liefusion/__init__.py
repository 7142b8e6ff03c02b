"""Tensor products, level-k fusion, modular data and their sum rules for simple Lie algebras."""
from .fusion import FusionRing, alcove, fusion_decompose, fusion_matrices, kac_walton, path_matrix
from .modular import (
    ModularData,
    frobenius_schur,
    quantum_dimension,
    s_matrix,
    sigma_sum,
    sigma_sums,
    t_matrix,
    verlinde,
)
from .rootdata import AlgebraId, CartanData, build_cartan_data, parse_algebra, parse_weight
from .symmetry import RepType, automorphisms, conjugate, rep_type
from .tensor import Decomposition, tensor_decompose, total_multiplicity
from .weightsys import freudenthal, reduce_shifted, weight_system, weyl_dimension

__version__ = "0.1.0"

__all__ = [
    "AlgebraId",
    "CartanData",
    "Decomposition",
    "FusionRing",
    "ModularData",
    "RepType",
    "alcove",
    "automorphisms",
    "build_cartan_data",
    "conjugate",
    "freudenthal",
    "frobenius_schur",
    "fusion_decompose",
    "fusion_matrices",
    "kac_walton",
    "parse_algebra",
    "parse_weight",
    "path_matrix",
    "quantum_dimension",
    "reduce_shifted",
    "rep_type",
    "s_matrix",
    "sigma_sum",
    "sigma_sums",
    "t_matrix",
    "tensor_decompose",
    "total_multiplicity",
    "verlinde",
    "weight_system",
    "weyl_dimension",
]
