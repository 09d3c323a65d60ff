"""Skew minimality via the subgroups generated by images of return words."""

from dataclasses import dataclass, field

from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import Subgroup, subgroup_generated, whole_group
from group_density.core.config import settings
from group_density.core.exceptions import SemiDecisionError
from group_density.core.logging import evidence_logger
from group_density.shifts.returns import return_words
from group_density.shifts.spaces import ShiftSpace


@dataclass(frozen=True)
class ReturnSubgroupStep:
    length: int
    u: str
    returns: int
    subgroup: tuple[int, ...]
    certified: bool


@dataclass(frozen=True)
class MinimalityEvidence:
    """Outcome of the return-subgroup sweep along prefixes of the canonical point."""

    minimal: bool
    subgroup: Subgroup
    complete: bool
    steps: list[ReturnSubgroupStep] = field(default_factory=list)

    @property
    def stable_length(self) -> int | None:
        return self.steps[-1].length if self.complete and self.steps else None


def return_subgroup(shift: ShiftSpace, phi: GroupMorphism, u: str) -> tuple[Subgroup, ReturnSubgroupStep]:
    """⟨φ(R_X(u))⟩ with the step record for the evidence log."""
    cert = return_words(shift, u)
    subgroup = subgroup_generated(phi.group, (phi.word_image(r) for r in cert.returns))
    return subgroup, ReturnSubgroupStep(len(u), u, len(cert.returns), subgroup.members, cert.complete)


def skew_minimal(
    shift: ShiftSpace, phi: GroupMorphism, min_length: int | None = None, max_length: int | None = None
) -> MinimalityEvidence:
    """Whether ⟨φ(R_X(u))⟩ = G once it stabilizes along prefixes u of the canonical point.

    Subgroups along one point's prefixes are non-increasing, so the sweep doubles
    n until the subgroups at n and 2n coincide with both return sets certified.

    Raises:
        PreconditionError: If the shift is not a substitution or periodic shift
    """
    shift.require_minimal("skew_minimal")
    group = phi.group
    log = evidence_logger("skew_minimal")
    if group.order == 1:
        return MinimalityEvidence(True, whole_group(group), True)

    n = min_length or settings.MINIMALITY_MIN_LENGTH
    cap = max_length or settings.MINIMALITY_MAX_LENGTH
    steps: list[ReturnSubgroupStep] = []
    current, record = return_subgroup(shift, phi, shift.point_prefix(n))
    steps.append(record)
    while 2 * n <= cap:
        nxt, nxt_record = return_subgroup(shift, phi, shift.point_prefix(2 * n))
        steps.append(nxt_record)
        if nxt == current and record.certified and nxt_record.certified:
            minimal = nxt.order == group.order
            log.info(f"{shift.describe()}: subgroup of order {nxt.order} stable at n={n},{2 * n}; minimal={minimal}")
            return MinimalityEvidence(minimal, nxt, True, steps)
        current, record, n = nxt, nxt_record, 2 * n
    log.warning(f"{shift.describe()}: return subgroups not stable below length {cap}")
    return MinimalityEvidence(current.order == group.order, current, False, steps)


@dataclass(frozen=True)
class WelldocWitness:
    elements: frozenset[int]
    occurrences: int
    prefix: str


def welldoc_witness(shift: ShiftSpace, phi: GroupMorphism, n: int, scan: int) -> WelldocWitness:
    """{φ(x[0,m)) : m ≤ scan, x[m,m+n) = x[0,n)} along the canonical point x.

    Raises:
        SemiDecisionError: If the prefix does not recur within the scan window
    """
    text = shift.point_prefix(scan + n)
    prefix = text[:n]
    group = phi.group
    g = group.identity
    elements = set()
    count = 0
    for m in range(scan + 1):
        if text.startswith(prefix, m):
            elements.add(g)
            count += 1
        if m < len(text):
            g = group.mul(g, phi.image(text[m]))
    if count < 2:
        raise SemiDecisionError(f"prefix of length {n} does not recur within {scan} letters")
    return WelldocWitness(frozenset(elements), count, prefix)
