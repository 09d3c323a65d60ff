"""Monoid morphisms A* -> G and the two-sided cocycle they define."""

from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property
from typing import Protocol

from group_density.algebra.groups import FiniteGroup
from group_density.algebra.subgroups import Subgroup, subgroup_generated
from group_density.core.exceptions import GroupError, IndexUnavailableError, UnknownLetterError


@dataclass(frozen=True, eq=False)
class GroupMorphism:
    """Letter images extended multiplicatively, left to right."""

    alphabet: tuple[str, ...]
    group: FiniteGroup
    images: tuple[int, ...]

    def __post_init__(self):
        if len(self.alphabet) != len(self.images):
            raise GroupError("morphism needs one image per letter")
        for g in self.images:
            if not 0 <= g < self.group.order:
                raise GroupError(f"image {g} is not an element of {self.group.name}")

    @classmethod
    def from_mapping(
        cls, group: FiniteGroup, mapping: Mapping[str, str | int], alphabet: Sequence[str] | None = None
    ) -> "GroupMorphism":
        letters = tuple(alphabet) if alphabet is not None else tuple(sorted(mapping))
        missing = [a for a in letters if a not in mapping]
        if missing:
            raise UnknownLetterError(f"morphism has no image for letters {missing}")
        return cls(letters, group, tuple(group.element(mapping[a]) for a in letters))

    @cached_property
    def _lookup(self) -> dict[str, int]:
        return dict(zip(self.alphabet, self.images, strict=True))

    def image(self, letter: str) -> int:
        try:
            return self._lookup[letter]
        except KeyError as e:
            raise UnknownLetterError(f"letter {letter!r} is not in the morphism alphabet") from e

    def word_image(self, word: str) -> int:
        group, lookup = self.group, self._lookup
        result = group.identity
        for letter in word:
            try:
                result = group.mul(result, lookup[letter])
            except KeyError as e:
                raise UnknownLetterError(f"letter {letter!r} is not in the morphism alphabet") from e
        return result

    def image_subgroup(self) -> Subgroup:
        return subgroup_generated(self.group, self.images)

    def is_onto(self) -> bool:
        return self.image_subgroup().order == self.group.order

    def precompose(self, rules: Mapping[str, str]) -> "GroupMorphism":
        """Return φ∘σ for a substitution σ on the same alphabet."""
        return GroupMorphism(self.alphabet, self.group, tuple(self.word_image(rules[a]) for a in self.alphabet))

    def as_labels(self) -> dict[str, str]:
        return {a: self.group.label(g) for a, g in zip(self.alphabet, self.images, strict=True)}


def word_image(phi: GroupMorphism, word: str) -> int:
    """φ(w₀)·φ(w₁)·…·φ(w_{n−1}); the identity for the empty word."""
    return phi.word_image(word)


class PointHandle(Protocol):
    """Access to the letters of a bi-infinite word on some index range."""

    def segment(self, start: int, stop: int) -> str: ...

    def shifted(self, k: int) -> "PointHandle": ...


@dataclass(frozen=True)
class PeriodicPoint:
    """The bi-infinite word with x_i = word[(i + offset) mod |word|]."""

    word: str
    offset: int = 0

    def letter(self, i: int) -> str:
        return self.word[(i + self.offset) % len(self.word)]

    def segment(self, start: int, stop: int) -> str:
        return "".join(self.letter(i) for i in range(start, stop))

    def shifted(self, k: int) -> "PeriodicPoint":
        """Sᵏx."""
        return PeriodicPoint(self.word, (self.offset + k) % len(self.word))


@dataclass(frozen=True)
class WindowPoint:
    """A bi-infinite word known only on [start, start + len(letters))."""

    letters: str
    start: int = 0

    def segment(self, start: int, stop: int) -> str:
        if start < self.start or stop > self.start + len(self.letters):
            raise IndexUnavailableError(
                f"indices [{start}, {stop}) outside the known window "
                f"[{self.start}, {self.start + len(self.letters)})"
            )
        return self.letters[start - self.start : stop - self.start]

    def shifted(self, k: int) -> "WindowPoint":
        return WindowPoint(self.letters, self.start - k)


def cocycle(phi: GroupMorphism, x: PointHandle, n: int) -> int:
    """φ⁽ⁿ⁾(x): φ(x_[0,n)) for n ≥ 0 and φ(x_[n,0))⁻¹ for n < 0."""
    if n >= 0:
        return phi.word_image(x.segment(0, n))
    return phi.group.inv(phi.word_image(x.segment(n, 0)))
