"""Cobounding maps mod H: discovery, verification, the left G-action and coset masses."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

import sympy

from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import CosetPartition, Subgroup, right_cosets
from group_density.core.config import settings
from group_density.core.exceptions import PreconditionError
from group_density.core.logging import evidence_logger
from group_density.measures.base import CylinderMeasure
from group_density.shifts.spaces import ShiftSpace


@dataclass(frozen=True, eq=False)
class CoboundingMap:
    """α: L(X)∩A^ℓ → H\\G with α(w[1,ℓ]) = α(w[0,ℓ))·φ(w₀) on every (ℓ+1)-word."""

    partition: CosetPartition
    length: int
    assignment: dict[str, int]

    @property
    def subgroup(self) -> Subgroup:
        return self.partition.subgroup

    def value(self, word: str) -> int:
        """Coset of a word of length ≥ ℓ (its first ℓ letters decide)."""
        return self.assignment[word[: self.length]]

    def coset_members(self, word: str) -> frozenset[int]:
        return frozenset(self.partition.cosets[self.value(word)])

    @cached_property
    def invariant_set(self) -> frozenset[tuple[str, int]]:
        """Y_α at cylinder level: pairs (w, g) with g ∈ α(w)."""
        return frozenset((w, g) for w, c in self.assignment.items() for g in self.partition.cosets[c])

    def labels(self) -> dict[str, str]:
        return {w: self.partition.coset_label(c) for w, c in sorted(self.assignment.items())}


@dataclass(frozen=True)
class CoboundingCheck:
    valid: bool
    violations: list[str]


def verify_cobounding(shift: ShiftSpace, phi: GroupMorphism, alpha: CoboundingMap) -> CoboundingCheck:
    """Check totality on L(X)∩A^ℓ and the coboundary equation on L(X)∩A^{ℓ+1}."""
    violations = []
    words = set(shift.language(alpha.length))
    missing = sorted(words - set(alpha.assignment))
    extra = sorted(set(alpha.assignment) - words)
    violations.extend(f"no value for cylinder {w!r}" for w in missing)
    violations.extend(f"value for {w!r}, which is not in the language" for w in extra)
    if missing or extra:
        return CoboundingCheck(False, violations)
    partition, ell = alpha.partition, alpha.length
    for w in shift.language(ell + 1):
        expected = partition.act(alpha.assignment[w[:ell]], phi.image(w[0]))
        if alpha.assignment[w[1:]] != expected:
            violations.append(w)
    return CoboundingCheck(not violations, violations)


def _propagate(
    shift: ShiftSpace, phi: GroupMorphism, partition: CosetPartition, ell: int, seed_value: int
) -> dict[str, int] | None:
    words = shift.language(ell)
    edges: dict[str, list[tuple[str, int]]] = {}
    for w in shift.language(ell + 1):
        edges.setdefault(w[:ell], []).append((w[1:], phi.image(w[0])))
    assignment = {words[0]: seed_value}
    queue = deque([words[0]])
    while queue:
        w = queue.popleft()
        for target, g in edges.get(w, []):
            value = partition.act(assignment[w], g)
            known = assignment.get(target)
            if known is None:
                assignment[target] = value
                queue.append(target)
            elif known != value:
                return None
    if len(assignment) != len(words):
        return None
    return assignment


def find_cobounding(
    shift: ShiftSpace, phi: GroupMorphism, subgroup: Subgroup, max_length: int | None = None
) -> CoboundingMap | None:
    """First ℓ ≤ max_length with a consistent coset assignment on the Rauzy graph of order ℓ.

    The least cylinder is seeded with each coset in index order; values propagate along
    edges w → w' (w' the suffix of wa) by the right action of φ(w₀).
    """
    max_length = settings.COBOUNDING_MAX_LENGTH if max_length is None else max_length
    partition = right_cosets(phi.group, subgroup)
    log = evidence_logger("find_cobounding")
    for ell in range(max_length + 1):
        for seed_value in range(partition.count):
            assignment = _propagate(shift, phi, partition, ell, seed_value)
            if assignment is not None:
                log.info(f"subgroup order {subgroup.order}: consistent map at ℓ={ell} (seed coset {seed_value})")
                return CoboundingMap(partition, ell, assignment)
    log.info(f"subgroup order {subgroup.order}: no cobounding map up to ℓ={max_length}")
    return None


def refine(shift: ShiftSpace, alpha: CoboundingMap, length: int) -> CoboundingMap:
    """The same map read on longer cylinders."""
    if length < alpha.length:
        raise PreconditionError(f"cannot refine a length-{alpha.length} map to length {length}")
    return CoboundingMap(alpha.partition, length, {w: alpha.value(w) for w in shift.language(length)})


def shifted(alpha: CoboundingMap, g: int) -> CoboundingMap:
    """Left action g·α: a cobounding map mod gHg⁻¹ with g·Hx = (gHg⁻¹)·gx."""
    group = alpha.subgroup.parent
    partition = right_cosets(group, alpha.subgroup.conjugate(g))
    assignment = {
        w: partition.coset(group.mul(g, alpha.partition.representatives[c])) for w, c in alpha.assignment.items()
    }
    return CoboundingMap(partition, alpha.length, assignment)


def orbit(alpha: CoboundingMap) -> list[CoboundingMap]:
    """Distinct maps g·α, one per distinct invariant set, in order of first g."""
    seen, maps = set(), []
    for g in alpha.subgroup.parent.elements:
        moved = shifted(alpha, g)
        if moved.invariant_set not in seen:
            seen.add(moved.invariant_set)
            maps.append(moved)
    return maps


@dataclass(frozen=True)
class CosetMasses:
    """μ(α⁻¹(Hg)) per coset index, with exact values for rational measures."""

    values: dict[int, float]
    exact: dict[int, sympy.Rational] | None

    def total(self) -> float:
        return sum(self.values.values())


def coset_masses(shift: ShiftSpace, phi: GroupMorphism, alpha: CoboundingMap, measure: CylinderMeasure) -> CosetMasses:
    """Raises PreconditionError if α is not a verified cobounding map."""
    if not verify_cobounding(shift, phi, alpha).valid:
        raise PreconditionError("coset masses need a verified cobounding map")
    values = dict.fromkeys(range(alpha.partition.count), 0.0)
    exact = {c: sympy.Integer(0) for c in values} if measure.is_rational else None
    for w, c in alpha.assignment.items():
        values[c] += measure.value(w)
        if exact is not None:
            exact[c] += measure.rational_value(w)
    return CosetMasses(values, exact)


def measure_of_y_alpha(alpha: CoboundingMap, masses: CosetMasses) -> float:
    """(ν×μ)(Y_α) = Σ_{Hg} (|H|/|G|)·μ(α⁻¹(Hg))."""
    weight = alpha.subgroup.order / alpha.subgroup.parent.order
    return sum(weight * mass for mass in masses.values.values())
