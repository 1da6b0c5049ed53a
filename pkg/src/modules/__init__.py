from .spec import ModuleSpec
from .graded import GradedVector, GradedSubspace
from .action import (
    act,
    act_homogeneous,
    act_sum,
    act_word,
    root_field,
    product_shifts,
    product_word,
    operator_product_trick,
    elementary_symmetric,
    pairing_constant,
    expected_product,
)
from .wedge_modules import (
    WedgeSubmodule,
    DerhamDegreeCheck,
    psi_target,
    psi_matrix,
    psi,
    quotient_piece,
    derham_degree_check,
)

__all__ = [
    "ModuleSpec",
    "GradedVector",
    "GradedSubspace",
    "act",
    "act_homogeneous",
    "act_sum",
    "act_word",
    "root_field",
    "product_shifts",
    "product_word",
    "operator_product_trick",
    "elementary_symmetric",
    "pairing_constant",
    "expected_product",
    "WedgeSubmodule",
    "DerhamDegreeCheck",
    "psi_target",
    "psi_matrix",
    "psi",
    "quotient_piece",
    "derham_degree_check",
]
