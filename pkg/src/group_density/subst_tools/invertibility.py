"""Invertibility of a substitution under a morphism: the least n with φ∘σⁿ = φ."""

from dataclasses import dataclass

from group_density.algebra.morphisms import GroupMorphism
from group_density.core.logging import evidence_logger
from group_density.shifts.spaces import SubstitutionShift


@dataclass(frozen=True)
class InvertibilityResult:
    """``definitive`` is False only when the cap cut the search short."""

    order: int | None
    cap: int
    definitive: bool

    @property
    def invertible(self) -> bool:
        return self.order is not None


def invertibility_order(shift: SubstitutionShift, phi: GroupMorphism, cap: int | None = None) -> InvertibilityResult:
    """Least n ≥ 1 with φ∘σⁿ = φ on letters.

    The sequence φ∘σᵏ lives in the finite set of maps A → G, so it is eventually
    periodic; once a state repeats without meeting φ the negative answer is final.
    """
    bound = len(phi.group.elements) ** len(phi.alphabet)
    cap = bound if cap is None else cap
    log = evidence_logger("invertibility_order")
    seen = {phi.images}
    current = phi
    for n in range(1, cap + 1):
        current = current.precompose(shift.rules)
        if current.images == phi.images:
            log.info(f"{shift.describe()}: φ∘σ^{n} = φ")
            return InvertibilityResult(n, cap, True)
        if current.images in seen:
            log.info(f"{shift.describe()}: φ∘σ^k cycles after {n} steps without returning to φ")
            return InvertibilityResult(None, cap, True)
        seen.add(current.images)
    log.warning(f"{shift.describe()}: no n ≤ {cap} with φ∘σⁿ = φ")
    return InvertibilityResult(None, cap, False)
