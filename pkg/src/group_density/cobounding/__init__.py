"""Cobounding maps and the decomposition of G⋊X into minimal closed invariant subsets."""

from group_density.cobounding.decomposition import (
    MinimalDecomposition,
    MinimalityCertificate,
    certify_minimal_maps,
    ergodicity_certificates,
    minimal_decomposition,
    minimal_subgroup,
)
from group_density.cobounding.maps import (
    CoboundingCheck,
    CoboundingMap,
    CosetMasses,
    coset_masses,
    find_cobounding,
    measure_of_y_alpha,
    orbit,
    refine,
    shifted,
    verify_cobounding,
)

__all__ = [
    "CoboundingMap",
    "CoboundingCheck",
    "CosetMasses",
    "MinimalDecomposition",
    "MinimalityCertificate",
    "find_cobounding",
    "verify_cobounding",
    "refine",
    "shifted",
    "orbit",
    "coset_masses",
    "measure_of_y_alpha",
    "minimal_subgroup",
    "minimal_decomposition",
    "ergodicity_certificates",
    "certify_minimal_maps",
]
