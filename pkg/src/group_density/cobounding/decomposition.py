"""Minimal closed invariant subsets of G⋊X over a minimal base, one per minimal cobounding map."""

from dataclasses import dataclass, field

from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import Subgroup
from group_density.cobounding.maps import (
    CoboundingMap,
    CosetMasses,
    coset_masses,
    find_cobounding,
    measure_of_y_alpha,
    orbit,
    verify_cobounding,
)
from group_density.core.config import settings
from group_density.core.exceptions import InvariantBreachError, PreconditionError, SemiDecisionError
from group_density.core.logging import evidence_logger
from group_density.measures import CylinderMeasure, build_measure
from group_density.shifts.spaces import PeriodicShift, ShiftSpace, SubstitutionShift
from group_density.skew.minimality import MinimalityEvidence, return_subgroup, skew_minimal
from group_density.subst_tools.skew_substitution import skew_substitution

MOD_ONE = "mod-1"
PERIODIC_ORBIT = "periodic-orbit"
INVERTIBLE_SKEW_SUBSTITUTION = "invertible-skew-substitution"
RETURN_SUBGROUP = "return-subgroup"


def _stable_subgroup(shift: ShiftSpace, phi: GroupMorphism) -> tuple[Subgroup, MinimalityEvidence]:
    evidence = skew_minimal(shift, phi)
    if not evidence.complete:
        raise SemiDecisionError("return-word subgroups did not stabilize within the configured lengths")
    return evidence.subgroup.canonical(), evidence


def minimal_subgroup(shift: ShiftSpace, phi: GroupMorphism) -> Subgroup:
    """Conjugacy-canonical H = ⟨φ(R_X(u))⟩ for u long enough that the subgroup is stable.

    Raises:
        PreconditionError: If the shift is not a substitution or periodic shift
        SemiDecisionError: If stabilization is not certified within the configured lengths
    """
    subgroup, _ = _stable_subgroup(shift, phi)
    return subgroup


def ergodicity_certificates(shift: ShiftSpace, phi: GroupMorphism, subgroup: Subgroup) -> list[str]:
    """Sufficient conditions for ν×μ to be ergodic on every minimal subset."""
    found = []
    if subgroup.order == 1:
        found.append(MOD_ONE)
    if isinstance(shift, PeriodicShift):
        found.append(PERIODIC_ORBIT)
    if isinstance(shift, SubstitutionShift):
        try:
            lifted = skew_substitution(shift, phi)
        except PreconditionError:
            lifted = None
        if lifted is not None and len(lifted.components) == subgroup.index and all(lifted.component_primitive()):
            found.append(INVERTIBLE_SKEW_SUBSTITUTION)
    return found


@dataclass(frozen=True)
class MinimalityCertificate:
    """⟨φ(R_X(u))⟩ against the stabilizer of α(u) for every map α of an orbit.

    Each return word r of u satisfies α(u)·φ(r) = α(u), so the return subgroup always lies in
    the stabilizer; equality means no proper refinement of α exists.
    """

    u: str
    return_subgroup: Subgroup
    stabilizers: list[Subgroup]

    @property
    def holds(self) -> bool:
        return all(stabilizer == self.return_subgroup for stabilizer in self.stabilizers)


def certify_minimal_maps(
    shift: ShiftSpace, phi: GroupMorphism, maps: list[CoboundingMap], length: int = 0
) -> MinimalityCertificate:
    """Compare the return subgroup of a canonical-point prefix with the stabilizer of its coset under each map.

    The prefix has length max(``length``, ℓ, 1); pass the stable length of the return-subgroup sweep.

    Raises:
        SemiDecisionError: If the return words of the prefix are not certified
    """
    if not maps:
        raise PreconditionError("certify_minimal_maps needs at least one cobounding map")
    u = shift.point_prefix(max(length, maps[0].length, 1))
    generated, step = return_subgroup(shift, phi, u)
    if not step.certified:
        raise SemiDecisionError(f"return words of {u!r} not certified")
    stabilizers = [m.partition.stabilizer(m.value(u)) for m in maps]
    return MinimalityCertificate(u, generated, stabilizers)


@dataclass(frozen=True)
class MinimalDecomposition:
    subgroup: Subgroup
    maps: list[CoboundingMap]
    masses: list[CosetMasses]
    evidence: MinimalityEvidence
    certificates: list[str] = field(default_factory=list)
    minimality: MinimalityCertificate | None = None

    @property
    def count(self) -> int:
        return len(self.maps)

    @property
    def certified(self) -> bool:
        return bool(self.certificates)

    @property
    def cylinder_length(self) -> int:
        return self.maps[0].length


def minimal_decomposition(
    shift: ShiftSpace,
    phi: GroupMorphism,
    measure: CylinderMeasure | None = None,
    max_length: int | None = None,
) -> MinimalDecomposition:
    """H, one cobounding map mod H, its G-orbit and the coset masses of every map.

    Raises:
        SemiDecisionError: If H is not certified or no map exists up to ``max_length``
        InvariantBreachError: If a map fails verification or the orbit size is not [G:H]
    """
    subgroup, evidence = _stable_subgroup(shift, phi)
    max_length = settings.COBOUNDING_MAX_LENGTH if max_length is None else max_length
    alpha = find_cobounding(shift, phi, subgroup, max_length)
    if alpha is None:
        raise SemiDecisionError(f"no cobounding map mod a subgroup of order {subgroup.order} up to length {max_length}")
    measure = measure or build_measure(shift)

    maps = orbit(alpha)
    if len(maps) != subgroup.index:
        raise InvariantBreachError(f"orbit of the cobounding map has {len(maps)} elements, expected {subgroup.index}")
    masses = []
    for candidate in maps:
        check = verify_cobounding(shift, phi, candidate)
        if not check.valid:
            raise InvariantBreachError(f"cobounding map fails on {check.violations[:5]}")
        mass = coset_masses(shift, phi, candidate, measure)
        share = measure_of_y_alpha(candidate, mass)
        if abs(mass.total() - 1) > settings.TOLERANCE or abs(share - 1 / subgroup.index) > settings.TOLERANCE:
            raise InvariantBreachError(f"invariant subset has measure {share}, expected 1/{subgroup.index}")
        masses.append(mass)

    minimality = certify_minimal_maps(shift, phi, maps, evidence.stable_length or 0)
    if not minimality.holds:
        raise InvariantBreachError(
            f"return subgroup at {minimality.u!r} has order {minimality.return_subgroup.order}, "
            f"a map stabilizer differs from it"
        )
    certificates = ergodicity_certificates(shift, phi, subgroup)
    evidence_logger("minimal_decomposition").info(
        f"{shift.describe()}: H of order {subgroup.order}, {len(maps)} maps at ℓ={alpha.length}, "
        f"return subgroup at |u|={len(minimality.u)} matches every stabilizer, "
        f"certificates={certificates or 'none'}"
    )
    return MinimalDecomposition(subgroup, maps, masses, evidence, certificates, minimality)
