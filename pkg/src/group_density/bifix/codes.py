"""The finite X-complete bifix code U = Z∩L(X) of the group code Z with Z* = φ⁻¹(H)."""

from dataclasses import dataclass, field
from functools import cached_property

from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import Subgroup, trivial_subgroup
from group_density.core.config import settings
from group_density.core.exceptions import InvariantBreachError, PreconditionError, SemiDecisionError
from group_density.core.logging import evidence_logger
from group_density.measures.base import CylinderMeasure
from group_density.shifts.spaces import ShiftSpace
from group_density.skew.minimality import skew_minimal


def require_subgroup_of(phi: GroupMorphism, subgroup: Subgroup):
    if subgroup.parent is not phi.group:
        raise PreconditionError("H must be a subgroup of the morphism's target group")


def _in_h(phi: GroupMorphism, subgroup: Subgroup, word: str) -> bool:
    return phi.word_image(word) in subgroup


def _has_prefix_in_h(phi: GroupMorphism, subgroup: Subgroup, word: str) -> bool:
    """True iff some nonempty prefix of ``word`` maps into H."""
    group = phi.group
    g = group.identity
    for letter in word:
        g = group.mul(g, phi.image(letter))
        if g in subgroup:
            return True
    return False


def is_prefix_code(words: set[str]) -> bool:
    return not any(u != v and v.startswith(u) for u in words for v in words)


def is_suffix_code(words: set[str]) -> bool:
    return not any(u != v and v.endswith(u) for u in words for v in words)


@dataclass(frozen=True, eq=False)
class BifixCode:
    words: tuple[str, ...]
    morphism: GroupMorphism
    subgroup: Subgroup
    prefix_complete_length: int
    suffix_complete_length: int | None

    @property
    def degree_bound(self) -> int:
        return self.subgroup.index

    @cached_property
    def proper_prefixes(self) -> tuple[str, ...]:
        """P∩L(X): the proper prefixes of U-words, ε included."""
        prefixes = {u[:i] for u in self.words for i in range(len(u))}
        return tuple(sorted(prefixes, key=lambda w: (len(w), w)))

    @property
    def max_length(self) -> int:
        return max(len(u) for u in self.words)

    def parse_tree(self) -> str:
        """Indented prefix tree of U; code words are marked with their φ-image."""
        lines = []
        code = set(self.words)
        nodes = sorted(set(self.proper_prefixes) | code)
        for node in nodes:
            label = node or "ε"
            suffix = f"  ∈ U, φ = {self.morphism.group.label(self.morphism.word_image(node))}" if node in code else ""
            lines.append("  " * len(node) + label + suffix)
        return "\n".join(lines)


def bifix_code(shift: ShiftSpace, phi: GroupMorphism, subgroup: Subgroup, cap: int | None = None) -> BifixCode:
    """Enumerate U by length until every word of L(X)∩Aⁿ has a prefix in U.

    Raises:
        PreconditionError: If the shift is not minimal
        SemiDecisionError: If prefix completeness is not reached by the length cap
        InvariantBreachError: If the result is not a bifix code
    """
    shift.require_minimal("bifix_code")
    require_subgroup_of(phi, subgroup)
    cap = cap or settings.BIFIX_LENGTH_CAP
    log = evidence_logger("bifix_code")
    code: set[str] = set()
    complete_at = None
    for n in range(1, cap + 1):
        words = shift.language(n)
        for w in words:
            if _in_h(phi, subgroup, w) and not _has_prefix_in_h(phi, subgroup, w[:-1]):
                code.add(w)
        if all(any(w.startswith(u) for u in code) for w in words):
            complete_at = n
            break
    if complete_at is None:
        raise SemiDecisionError(f"U is not X-complete up to length {cap}")
    if not (is_prefix_code(code) and is_suffix_code(code)):
        raise InvariantBreachError(f"U = {sorted(code)} is not a bifix code")
    suffix_at = None
    for n in range(complete_at, cap + 1):
        if all(any(w.endswith(u) for u in code) for w in shift.language(n)):
            suffix_at = n
            break
    ordered = tuple(sorted(code, key=lambda w: (len(w), w)))
    log.info(f"{shift.describe()}: U = {list(ordered)} (prefix-complete at {complete_at}, suffix at {suffix_at})")
    return BifixCode(ordered, phi, subgroup, complete_at, suffix_at)


@dataclass(frozen=True)
class ParseData:
    word: str
    suffixes_in_p: tuple[str, ...]

    @property
    def degree(self) -> int:
        return len(self.suffixes_in_p)


def z_degree(phi: GroupMorphism, subgroup: Subgroup, u: str) -> ParseData:
    """Suffixes of u (ε included) with no nonempty prefix mapping into H."""
    suffixes = tuple(u[i:] for i in range(len(u), -1, -1) if not _has_prefix_in_h(phi, subgroup, u[i:]))
    return ParseData(u, suffixes)


@dataclass(frozen=True)
class DegreeResult:
    degree: int
    certified_length: int | None
    witness: str


def x_degree(shift: ShiftSpace, code: BifixCode) -> DegreeResult:
    """Largest Z-degree over L(X), read until it is constant over two lengths past the longest U-word.

    Raises:
        InvariantBreachError: If some degree exceeds [G:H]
    """
    phi, subgroup = code.morphism, code.subgroup
    best, witness, previous = 0, "", None
    cap = max(settings.BIFIX_LENGTH_CAP, code.max_length + 2)
    for n in range(cap + 1):
        for w in shift.language(n):
            d = z_degree(phi, subgroup, w).degree
            if d > code.degree_bound:
                raise InvariantBreachError(f"Z-degree {d} of {w!r} exceeds [G:H] = {code.degree_bound}")
            if d > best:
                best, witness = d, w
        if best == code.degree_bound or (n >= code.max_length + 2 and best == previous):
            return DegreeResult(best, n, witness)
        previous = best
    return DegreeResult(best, None, witness)


@dataclass(frozen=True)
class AverageLength:
    by_code: float
    by_prefixes: float

    @property
    def difference(self) -> float:
        return abs(self.by_code - self.by_prefixes)


def average_length(code: BifixCode, measure: CylinderMeasure) -> AverageLength:
    """ℓ(U) as Σ_{u∈U} |u|·μ(u) and as Σ_{w∈P} μ(w)."""
    return AverageLength(
        sum(len(u) * measure.value(u) for u in code.words),
        sum(measure.value(w) for w in code.proper_prefixes),
    )


@dataclass(frozen=True)
class ContainmentCheck:
    holds: bool
    violations: list[tuple[str, str]] = field(default_factory=list)


def maximal_degree_containment(code: BifixCode, degree: int) -> ContainmentCheck:
    """No internal factor of a U-word (nonempty on both sides) has maximal Z-degree."""
    violations = []
    for u in code.words:
        factors = {u[i:j] for i in range(1, len(u)) for j in range(i + 1, len(u))}
        for v in sorted(factors):
            if z_degree(code.morphism, code.subgroup, v).degree == degree:
                violations.append((u, v))
    return ContainmentCheck(not violations, violations)


@dataclass(frozen=True)
class SurjectivityCheck:
    applicable: bool
    reason: str
    group_order: int
    degree: int | None = None
    average_length: float | None = None
    holds: bool | None = None
    notes: list[str] = field(default_factory=list)


def degree_surjectivity_check(shift: ShiftSpace, phi: GroupMorphism, measure: CylinderMeasure) -> SurjectivityCheck:
    """With H trivial and G⋊X minimal, d_X(U) = |G| and ℓ(U) = |G|."""
    order = phi.group.order
    evidence = skew_minimal(shift, phi)
    if not (evidence.complete and evidence.minimal):
        return SurjectivityCheck(False, "the skew product is not certified minimal", order)
    code = bifix_code(shift, phi, trivial_subgroup(phi.group))
    degree = x_degree(shift, code).degree
    avg = average_length(code, measure)
    holds = degree == order and abs(avg.by_code - order) <= settings.TOLERANCE
    notes = [f"δ_μ(φ⁻¹(1)) = 1/|G| = 1/ℓ(U) = {1 / avg.by_code:.12g}"]
    if not holds:
        raise InvariantBreachError(f"minimal skew product with X-degree {degree} and ℓ(U) = {avg.by_code}, |G| = {order}")
    return SurjectivityCheck(True, "H trivial and G⋊X minimal", order, degree, avg.by_code, holds, notes)
