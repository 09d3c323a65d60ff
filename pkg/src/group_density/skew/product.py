"""The skew product G⋊X presented as a shift over G×A.

A point (g, x) is sent to the bi-infinite word whose n-th letter is
(g·φ⁽ⁿ⁾(x), xₙ), so skew words are exactly the lifts of base words with
g_{i+1} = g_i·φ(w_i).
"""

from dataclasses import dataclass

from group_density.algebra.morphisms import GroupMorphism
from group_density.core.exceptions import PreconditionError
from group_density.schemas.shift import ShiftSpecModel
from group_density.shifts.letters import LetterCoder
from group_density.shifts.spaces import PeriodicShift, SFTShift, ShiftSpace


@dataclass(frozen=True)
class PeriodicOrbit:
    """One finite orbit of a skew product over a periodic base."""

    letters: tuple[str, ...]

    @property
    def period(self) -> int:
        return len(self.letters)

    def render(self) -> str:
        return "(" + " ".join(self.letters) + ")^∞"


class SkewShift(ShiftSpace):
    """G⋊X with letters labelled 'g:a'."""

    kind = "skew"

    def __init__(self, base: ShiftSpace, morphism: GroupMorphism):
        if sorted(base.alphabet) != sorted(morphism.alphabet):
            raise PreconditionError(
                f"morphism alphabet {list(morphism.alphabet)} does not match shift alphabet {list(base.alphabet)}"
            )
        self.base = base
        self.morphism = morphism
        self.group = morphism.group
        self.pairs = tuple((g, a) for g in self.group.elements for a in base.alphabet)
        self.coder = LetterCoder([self.pair_label(g, a) for g, a in self.pairs])
        self.alphabet = self.coder.symbols
        self._pair_of = dict(zip(self.alphabet, self.pairs, strict=True))

    def pair_label(self, g: int, a: str) -> str:
        return f"{self.group.label(g)}:{a}"

    def letter(self, g: int, a: str) -> str:
        return self.coder.encode(self.pair_label(g, a))

    def pair(self, symbol: str) -> tuple[int, str]:
        return self._pair_of[symbol]

    def lift(self, g: int, word: str) -> str:
        """Ψ(g, ·) on a finite word: the skew word starting in fiber g."""
        letters = []
        for a in word:
            letters.append(self.letter(g, a))
            g = self.group.mul(g, self.morphism.image(a))
        return "".join(letters)

    def project(self, skew_word: str) -> str:
        return "".join(self.pair(s)[1] for s in skew_word)

    def fibers(self, skew_word: str) -> list[int]:
        return [self.pair(s)[0] for s in skew_word]

    def is_compatible(self, skew_word: str) -> bool:
        """True iff g_{i+1} = g_i·φ(w_i) along the word."""
        pairs = [self.pair(s) for s in skew_word]
        return all(
            self.group.mul(g, self.morphism.image(a)) == h for (g, a), (h, _) in zip(pairs, pairs[1:], strict=False)
        )

    def render(self, skew_word: str) -> str:
        return self.coder.render(skew_word)

    def _factors(self, n: int) -> set[str]:
        return {self.lift(g, w) for w in self.base.language(n) for g in self.group.elements}

    def as_shift(self) -> ShiftSpace:
        """SFT over G×A for SFT and periodic bases; the skew shift itself otherwise."""
        base = self.base.as_sft() if isinstance(self.base, PeriodicShift) else self.base
        if not isinstance(base, SFTShift):
            return self
        allowed = {self.lift(g, w) for w in base.language(base.step + 1) for g in self.group.elements}
        return SFTShift(self.alphabet, base.step, allowed, name=self.describe())

    def periodic_orbits(self) -> list[PeriodicOrbit]:
        """Finite orbit decomposition over a periodic base; one orbit per left coset of ⟨φ(p)⟩."""
        if not isinstance(self.base, PeriodicShift):
            raise PreconditionError("periodic orbits need a periodic base")
        word = self.base.word
        h = self.morphism.word_image(word)
        m = self.group.element_order(h)
        orbits, seen = [], set()
        for g in self.group.elements:
            if g in seen:
                continue
            current = g
            for _ in range(m):
                seen.add(current)
                current = self.group.mul(current, h)
            orbits.append(PeriodicOrbit(tuple(self.coder.decode_word(self.lift(g, word * m)))))
        return orbits

    def to_spec(self) -> ShiftSpecModel:
        shift = self.as_shift()
        if shift is self:
            raise PreconditionError("only skew products over SFT or periodic bases have a shift-spec form")
        return shift.to_spec()

    def describe(self) -> str:
        return f"{self.group.name} ⋊ {self.base.describe()}"


def skew_shift(shift: ShiftSpace, morphism: GroupMorphism) -> SkewShift:
    return SkewShift(shift, morphism)
