from .root_system import (
    RootSystemA,
    Weight,
    WeightLabel,
    AlphaOffset,
    Interval,
    ThetaStringData,
    LabelCase,
    check_label,
    parse_label,
    label_of,
    pairing,
    reflect,
    kappa,
    lowest_weight_by_reflections,
    theta_string_data,
    is_minuscule,
    label_case,
    epsilon_coordinates,
    offset_from_epsilon,
    elementary_shift,
)
from .oracle import (
    ThetaCensus,
    ThetaString,
    weyl_dimension,
    is_weight,
    enumerate_weights,
    lowest_weight_offset,
    weight_string,
    theta_string_census,
)

__all__ = [
    "RootSystemA",
    "Weight",
    "WeightLabel",
    "AlphaOffset",
    "Interval",
    "ThetaStringData",
    "LabelCase",
    "check_label",
    "parse_label",
    "label_of",
    "pairing",
    "reflect",
    "kappa",
    "lowest_weight_by_reflections",
    "theta_string_data",
    "is_minuscule",
    "label_case",
    "epsilon_coordinates",
    "offset_from_epsilon",
    "elementary_shift",
    "ThetaCensus",
    "ThetaString",
    "weyl_dimension",
    "is_weight",
    "enumerate_weights",
    "lowest_weight_offset",
    "weight_string",
    "theta_string_census",
]
