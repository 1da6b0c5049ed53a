from .irrep import (
    Irrep,
    weight_decompose,
    weight_component,
    commutation_failures,
    irrep_to_dict,
    irrep_from_dict,
)
from .wedge import (
    WedgeIndices,
    sort_with_sign,
    apply_elementary,
    wedge_with,
    fundamental_label,
    build_wedge,
    wedge_vector,
    wedge_coefficients,
    wedge_degree,
    wedge_map_matrix,
)
from .construction import build_irrep, check_bounds
from .intertwiner import find_intertwiner, irreducibility_witness

__all__ = [
    "Irrep",
    "weight_decompose",
    "weight_component",
    "commutation_failures",
    "irrep_to_dict",
    "irrep_from_dict",
    "WedgeIndices",
    "sort_with_sign",
    "apply_elementary",
    "wedge_with",
    "fundamental_label",
    "build_wedge",
    "wedge_vector",
    "wedge_coefficients",
    "wedge_degree",
    "wedge_map_matrix",
    "build_irrep",
    "check_bounds",
    "find_intertwiner",
    "irreducibility_witness",
]
