"""The skew product G⋊X and its decision procedures."""

from group_density.skew.irreducibility import (
    SIRelation,
    StrongIrreducibility,
    fiber_ergodic,
    phi_irreducible,
    si_witness_morphism,
    skew_transitive,
    strongly_irreducible,
)
from group_density.skew.minimality import MinimalityEvidence, skew_minimal, welldoc_witness
from group_density.skew.product import PeriodicOrbit, SkewShift, skew_shift

__all__ = [
    "SkewShift",
    "PeriodicOrbit",
    "skew_shift",
    "phi_irreducible",
    "skew_transitive",
    "fiber_ergodic",
    "strongly_irreducible",
    "StrongIrreducibility",
    "SIRelation",
    "si_witness_morphism",
    "skew_minimal",
    "MinimalityEvidence",
    "welldoc_witness",
]
