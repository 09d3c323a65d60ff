"""Decision procedures for φ-irreducibility, skew transitivity, fiber ergodicity
and strong irreducibility."""

from collections import deque
from dataclasses import dataclass

from loguru import logger
from networkx.utils import UnionFind

from group_density.algebra.groups import cyclic_group
from group_density.algebra.morphisms import GroupMorphism
from group_density.core.exceptions import (
    InvariantBreachError,
    PreconditionError,
    ReducibleShiftError,
    SemiDecisionError,
)
from group_density.shifts.spaces import PeriodicShift, SFTShift, ShiftSpace, SubstitutionShift
from group_density.skew.product import SkewShift

FIBER_FIXPOINT_MAX_STEPS = 100_000


def _as_sft(shift: ShiftSpace) -> SFTShift:
    if isinstance(shift, PeriodicShift):
        return shift.as_sft()
    if isinstance(shift, SFTShift):
        return shift
    raise PreconditionError(f"this procedure needs an SFT, got a {shift.kind} shift")


def phi_irreducible(shift: ShiftSpace, phi: GroupMorphism) -> bool:
    """For all r-blocks u, v: some w has uwv ∈ L(X) and φ(uw) = 1.

    Breadth-first search on states (block, φ of the consumed letters, steps capped at r),
    one search per source block.

    Raises:
        ReducibleShiftError: If the SFT is reducible
    """
    sft = _as_sft(shift)
    if not sft.is_irreducible():
        raise ReducibleShiftError(f"{sft.describe()} is reducible")
    group, r = phi.group, sft.step
    blocks = sft.blocks()
    for u in blocks:
        start = (u, group.identity, 0)
        seen = {start}
        queue = deque([start])
        reached = set()
        while queue:
            block, g, steps = queue.popleft()
            if steps == r and g == group.identity:
                reached.add(block)
            h = group.mul(g, phi.image(block[0]))
            for nxt in sft.successors(block):
                state = (nxt, h, min(steps + 1, r))
                if state not in seen:
                    seen.add(state)
                    queue.append(state)
        missing = [v for v in blocks if v not in reached]
        if missing:
            logger.debug(f"phi_irreducible: no w with φ(uw)=1 for u={u!r}, v={missing[0]!r}")
            return False
    return True


def skew_transitive(shift: ShiftSpace, phi: GroupMorphism) -> bool:
    """Whether the skew SFT's essential graph is strongly connected."""
    skew = SkewShift(_as_sft(shift), phi).as_shift()
    return skew.is_irreducible()


def _sft_images(sft: SFTShift, phi: GroupMorphism) -> set[int]:
    group = phi.group
    images = {phi.word_image(w) for n in range(sft.step) for w in sft.language(n)}
    for u in sft.blocks():
        seen = {(u, group.identity)}
        queue = deque(seen)
        while queue:
            block, g = queue.popleft()
            images.add(group.mul(g, phi.word_image(block)))
            h = group.mul(g, phi.image(block[0]))
            for nxt in sft.successors(block):
                if (nxt, h) not in seen:
                    seen.add((nxt, h))
                    queue.append((nxt, h))
    return images


def _periodic_images(shift: PeriodicShift, phi: GroupMorphism) -> set[int]:
    text = shift.point_prefix(shift.period * (phi.group.order + 1))
    images = set()
    for start in range(shift.period):
        g = phi.group.identity
        images.add(g)
        for letter in text[start : start + shift.period * phi.group.order]:
            g = phi.group.mul(g, phi.image(letter))
            images.add(g)
    return images


def _substitution_images(shift: SubstitutionShift, phi: GroupMorphism) -> set[int]:
    """Images of all factors of σᵏ(a), by iterating (factors, prefixes, suffixes, total) per letter."""
    group = phi.group
    e = group.identity

    def step(state):
        nxt = []
        for a in shift.alphabet:
            parts = [state[c] for c in shift.rules[a]]
            factors, prefixes, suffixes = set(), set(), set()
            running = e
            for _, p_c, _, t_c in parts:
                prefixes.update(group.mul(running, p) for p in p_c)
                running = group.mul(running, t_c)
            total = running
            running = e
            for _, _, s_c, t_c in reversed(parts):
                suffixes.update(group.mul(s, running) for s in s_c)
                running = group.mul(t_c, running)
            for i, (f_i, _, s_i, t_i) in enumerate(parts):
                factors.update(f_i)
                crossing = set(s_i)
                for f_j, p_j, _, t_j in parts[i + 1 :]:
                    factors.update(group.mul(s, p) for s in crossing for p in p_j)
                    crossing = {group.mul(s, t_j) for s in crossing}
            nxt.append((frozenset(factors), frozenset(prefixes), frozenset(suffixes), total))
        return dict(zip(shift.alphabet, nxt, strict=True))

    state = {
        a: (frozenset({e, phi.image(a)}), frozenset({e, phi.image(a)}), frozenset({e, phi.image(a)}), phi.image(a))
        for a in shift.alphabet
    }
    images: set[int] = set()
    seen = set()
    for _ in range(FIBER_FIXPOINT_MAX_STEPS):
        key = tuple(state[a] for a in shift.alphabet)
        if key in seen:
            return images
        seen.add(key)
        for factors, _, _, _ in key:
            images |= factors
        state = step(state)
    raise SemiDecisionError("factor-image iteration did not cycle within the step budget")


def fiber_ergodic(shift: ShiftSpace, phi: GroupMorphism) -> bool:
    """Whether φ restricted to L(X) is onto G."""
    if isinstance(shift, SubstitutionShift):
        images = _substitution_images(shift, phi)
    elif isinstance(shift, PeriodicShift):
        images = _periodic_images(shift, phi)
    else:
        images = _sft_images(_as_sft(shift), phi)
    return len(images) == phi.group.order


@dataclass(frozen=True)
class SIRelation:
    """Classes of ≃_r on the r-blocks."""

    step: int
    classes: tuple[tuple[str, ...], ...]

    def class_of(self, block: str) -> tuple[str, ...]:
        for cls in self.classes:
            if block in cls:
                return cls
        raise PreconditionError(f"{block!r} is not an r-block of the shift")


@dataclass(frozen=True)
class StrongIrreducibility:
    strongly_irreducible: bool
    irreducible: bool
    relation: SIRelation


def strongly_irreducible(shift: ShiftSpace) -> StrongIrreducibility:
    """Irreducibility plus totality of the closure of 'u, v share a left extension of length r'."""
    sft = _as_sft(shift)
    r = sft.step
    blocks = sft.blocks()
    classes = UnionFind(blocks)
    by_left: dict[str, list[str]] = {}
    for word in sft.language(2 * r):
        by_left.setdefault(word[:r], []).append(word[r:])
    for rights in by_left.values():
        classes.union(*rights)
    partition = tuple(sorted(tuple(sorted(cls)) for cls in classes.to_sets()))
    irreducible = sft.is_irreducible()
    return StrongIrreducibility(irreducible and len(partition) == 1, irreducible, SIRelation(r, partition))


def si_witness_morphism(shift: ShiftSpace, cls) -> GroupMorphism:
    """Morphism into ℤ/2ℤ with φ(a) = 1 iff exactly one of a ∈ C, R(a) ⊆ C holds.

    Raises:
        PreconditionError: If the SFT is not 1-step, is strongly irreducible, or C is not a class
        InvariantBreachError: If the constructed morphism is φ-irreducible
    """
    sft = _as_sft(shift)
    if sft.step != 1:
        raise PreconditionError("the witness construction needs a 1-step SFT")
    result = strongly_irreducible(sft)
    if not result.irreducible:
        raise ReducibleShiftError(f"{sft.describe()} is reducible")
    if result.strongly_irreducible:
        raise PreconditionError(f"{sft.describe()} is strongly irreducible; no witness morphism exists")
    chosen = tuple(sorted(cls))
    if chosen not in result.relation.classes:
        raise PreconditionError(f"{list(chosen)} is not a class of the relation; classes are {result.relation.classes}")
    members = set(chosen)
    images = {}
    for a in sft.alphabet:
        followers = {v[-1] for v in sft.successors(a)} if a in sft.blocks() else set()
        images[a] = int((a in members) != (followers <= members))
    phi = GroupMorphism.from_mapping(cyclic_group(2), images, sft.alphabet)
    if phi_irreducible(sft, phi):
        raise InvariantBreachError(f"witness morphism {images} for class {list(chosen)} is φ-irreducible")
    return phi
