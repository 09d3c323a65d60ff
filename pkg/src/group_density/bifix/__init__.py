"""Group codes Z with Z* = φ⁻¹(H) and their finite X-complete parts U = Z∩L(X)."""

from group_density.bifix.codes import (
    AverageLength,
    BifixCode,
    ContainmentCheck,
    DegreeResult,
    ParseData,
    SurjectivityCheck,
    average_length,
    bifix_code,
    degree_surjectivity_check,
    is_prefix_code,
    is_suffix_code,
    maximal_degree_containment,
    x_degree,
    z_degree,
)

__all__ = [
    "BifixCode",
    "ParseData",
    "DegreeResult",
    "AverageLength",
    "ContainmentCheck",
    "SurjectivityCheck",
    "bifix_code",
    "z_degree",
    "x_degree",
    "average_length",
    "maximal_degree_containment",
    "degree_surjectivity_check",
    "is_prefix_code",
    "is_suffix_code",
]
