"""Subgroups, right cosets and conjugacy-class enumeration."""

from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

from group_density.algebra.groups import FiniteGroup
from group_density.core.config import settings
from group_density.core.exceptions import GroupError


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent``, members kept sorted."""

    parent: FiniteGroup
    members: tuple[int, ...]

    def __post_init__(self):
        member_set = set(self.members)
        group = self.parent
        if group.identity not in member_set:
            raise GroupError("subgroup must contain the identity")
        for g in self.members:
            if group.inv(g) not in member_set:
                raise GroupError(f"subgroup is not closed under inverses ({group.label(g)})")
            for h in self.members:
                if group.mul(g, h) not in member_set:
                    raise GroupError("subgroup is not closed under multiplication")
        if group.order % len(member_set) != 0:
            raise GroupError("subgroup order does not divide the group order")

    @classmethod
    def from_members(cls, parent: FiniteGroup, members: Iterable[int]) -> "Subgroup":
        return cls(parent, tuple(sorted(set(members))))

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self._member_set

    @cached_property
    def _member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and other.parent is self.parent and other.members == self.members

    def __hash__(self) -> int:
        return hash(self.members)

    def conjugate(self, g: int) -> "Subgroup":
        """Return g·H·g⁻¹."""
        return Subgroup.from_members(self.parent, (self.parent.conjugate(g, h) for h in self.members))

    def conjugates(self) -> list["Subgroup"]:
        distinct = {self.conjugate(g).members for g in self.parent.elements}
        return [Subgroup(self.parent, members) for members in sorted(distinct)]

    def canonical(self) -> "Subgroup":
        """Conjugacy-class representative with the lexicographically least member tuple."""
        return self.conjugates()[0]

    def is_normal(self) -> bool:
        return len(self.conjugates()) == 1

    def labels(self) -> list[str]:
        return [self.parent.label(g) for g in self.members]


def subgroup_generated(group: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest subgroup containing ``gens``, by multiplicative closure."""
    gens = sorted(set(gens))
    members = {group.identity}
    frontier = [group.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = group.mul(g, s)
                if h not in members:
                    members.add(h)
                    nxt.append(h)
        frontier = nxt
    return Subgroup.from_members(group, members)


def trivial_subgroup(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, (group.identity,))


def whole_group(group: FiniteGroup) -> Subgroup:
    return Subgroup(group, tuple(group.elements))


@dataclass(frozen=True, eq=False)
class CosetPartition:
    """Right cosets Hg of a subgroup, with canonical (minimal) representatives."""

    subgroup: Subgroup
    cosets: tuple[tuple[int, ...], ...]
    representatives: tuple[int, ...]
    coset_of: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.cosets)

    def coset(self, g: int) -> int:
        return self.coset_of[g]

    def act(self, coset: int, g: int) -> int:
        """Right action: Hx · g = H(xg)."""
        group = self.subgroup.parent
        return self.coset_of[group.mul(self.representatives[coset], g)]

    def stabilizer(self, coset: int) -> Subgroup:
        """{g : Hx·g = Hx} = x⁻¹Hx."""
        group = self.subgroup.parent
        return Subgroup.from_members(group, (g for g in group.elements if self.act(coset, g) == coset))

    def representative_label(self, coset: int) -> str:
        return self.subgroup.parent.label(self.representatives[coset])

    def coset_label(self, coset: int) -> str:
        rep = self.representatives[coset]
        group = self.subgroup.parent
        return "H" if rep in self.subgroup else f"H{group.label(rep)}"

    def coset_by_label(self, label: str | int) -> int:
        return self.coset(self.subgroup.parent.element(label))


def right_cosets(group: FiniteGroup, subgroup: Subgroup) -> CosetPartition:
    """Partition ``group`` into right cosets of ``subgroup``."""
    if subgroup.parent is not group:
        raise GroupError("subgroup belongs to a different group")
    coset_of = [-1] * group.order
    cosets, reps = [], []
    for g in group.elements:
        if coset_of[g] != -1:
            continue
        coset = tuple(sorted({group.mul(h, g) for h in subgroup.members}))
        for x in coset:
            coset_of[x] = len(cosets)
        cosets.append(coset)
        reps.append(coset[0])
    return CosetPartition(subgroup, tuple(cosets), tuple(reps), tuple(coset_of))


def enumerate_subgroups(group: FiniteGroup) -> list[Subgroup]:
    """All subgroups up to conjugacy, canonical representatives sorted by (order, members).

    Raises:
        GroupError: If the group is larger than SUBGROUP_ENUMERATION_MAX_ORDER
    """
    if group.order > settings.SUBGROUP_ENUMERATION_MAX_ORDER:
        raise GroupError(
            f"subgroup enumeration supports groups of order <= {settings.SUBGROUP_ENUMERATION_MAX_ORDER}"
        )
    found = {subgroup_generated(group, [g]).members for g in group.elements}
    pending = list(found)
    while pending:
        members = pending.pop()
        for other in list(found):
            joined = subgroup_generated(group, set(members) | set(other)).members
            if joined not in found:
                found.add(joined)
                pending.append(joined)
    representatives = {Subgroup(group, members).canonical().members for members in found}
    return sorted((Subgroup(group, m) for m in representatives), key=lambda s: (s.order, s.members))
