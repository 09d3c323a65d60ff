"""Finite groups, subgroups and cosets, and morphisms from free monoids."""

from group_density.algebra.groups import FiniteGroup, build_group, cyclic_group, symmetric_group
from group_density.algebra.morphisms import (
    GroupMorphism,
    PeriodicPoint,
    PointHandle,
    WindowPoint,
    cocycle,
    word_image,
)
from group_density.algebra.subgroups import (
    CosetPartition,
    Subgroup,
    enumerate_subgroups,
    right_cosets,
    subgroup_generated,
    trivial_subgroup,
    whole_group,
)

__all__ = [
    # Groups
    "FiniteGroup",
    "build_group",
    "cyclic_group",
    "symmetric_group",
    # Subgroups
    "Subgroup",
    "CosetPartition",
    "subgroup_generated",
    "right_cosets",
    "enumerate_subgroups",
    "trivial_subgroup",
    "whole_group",
    # Morphisms
    "GroupMorphism",
    "word_image",
    "cocycle",
    "PointHandle",
    "PeriodicPoint",
    "WindowPoint",
]
