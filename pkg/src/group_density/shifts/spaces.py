"""Shift spaces behind one interface: shifts of finite type, primitive
substitution shifts and periodic orbits.

Every backend answers ``language(n)`` through a memoized
:class:`~group_density.shifts.language.LanguageOracle`. Minimal backends
(substitution and periodic) additionally expose covering words, i.e. finite
words whose length-n factors are exactly L(X)∩Aⁿ, and prefixes of a point.
"""

from abc import ABC, abstractmethod
from collections.abc import Iterable, Mapping
from functools import cached_property
from itertools import product as cartesian

import networkx as nx
import numpy as np
from loguru import logger

from group_density.algebra.morphisms import PeriodicPoint
from group_density.core.exceptions import PreconditionError, ShiftError, WordNotInLanguageError
from group_density.schemas.shift import PeriodicSpec, SFTSpec, ShiftSpecModel, SubstitutionSpec
from group_density.shifts.language import LanguageOracle


class ShiftSpace(ABC):
    """Common surface of the three shift backends."""

    kind: str
    alphabet: tuple[str, ...]

    @cached_property
    def oracle(self) -> LanguageOracle:
        return LanguageOracle(self._factors, name=self.describe())

    def language(self, n: int) -> tuple[str, ...]:
        """L(X)∩Aⁿ, sorted; ``("",)`` for n = 0."""
        return self.oracle.words(n)

    def contains(self, word: str) -> bool:
        return self.oracle.contains(word)

    def require_word(self, word: str):
        if not self.contains(word):
            raise WordNotInLanguageError(f"{word!r} is not in the language of {self.describe()}")

    @property
    def is_minimal(self) -> bool:
        return False

    def require_minimal(self, operation: str):
        if not self.is_minimal:
            raise PreconditionError(f"{operation} needs a substitution or periodic shift, got {self.kind}")

    def covering_words(self, n: int) -> list[str]:
        """Finite words whose length-n factors are exactly L(X)∩Aⁿ."""
        raise PreconditionError(f"covering words are not available for {self.kind} shifts")

    def point_prefix(self, length: int) -> str:
        """Prefix of the canonical point (fixed point or periodic word)."""
        raise PreconditionError(f"{self.kind} shifts have no canonical point")

    @abstractmethod
    def _factors(self, n: int) -> set[str]: ...

    @abstractmethod
    def to_spec(self) -> ShiftSpecModel: ...

    @abstractmethod
    def describe(self) -> str: ...


# Shifts of finite type


class SFTShift(ShiftSpace):
    """r-step shift of finite type stored by its allowed (r+1)-blocks."""

    kind = "sft"

    def __init__(self, alphabet: Iterable[str], step: int, allowed: Iterable[str], name: str | None = None):
        self.alphabet = tuple(alphabet)
        self.step = step
        self.allowed = frozenset(allowed)
        self.name = name
        if step < 1:
            raise ShiftError("SFT step must be at least 1")
        letters = set(self.alphabet)
        for block in self.allowed:
            if len(block) != step + 1 or not set(block) <= letters:
                raise ShiftError(f"allowed block {block!r} is not a word of length {step + 1} over the alphabet")

    @classmethod
    def from_forbidden(cls, alphabet: Iterable[str], step: int, forbidden: Iterable[str], name: str | None = None):
        """Build from forbidden words of length step+1.

        Raises:
            ShiftError: If a forbidden word has the wrong length or a letter outside the alphabet
        """
        alphabet = tuple(alphabet)
        forbidden = set(forbidden)
        for word in forbidden:
            if len(word) != step + 1:
                raise ShiftError(f"forbidden word {word!r} must have length {step + 1}")
            if not set(word) <= set(alphabet):
                raise ShiftError(f"forbidden word {word!r} uses letters outside {list(alphabet)}")
        allowed = {"".join(block) for block in cartesian(alphabet, repeat=step + 1)} - forbidden
        return cls(alphabet, step, allowed, name)

    @property
    def forbidden(self) -> list[str]:
        every = ("".join(block) for block in cartesian(self.alphabet, repeat=self.step + 1))
        return sorted(word for word in every if word not in self.allowed)

    @cached_property
    def block_graph(self) -> nx.DiGraph:
        """De Bruijn-style graph on r-blocks, one edge per allowed (r+1)-block."""
        graph = nx.DiGraph()
        for block in sorted(self.allowed):
            graph.add_edge(block[:-1], block[1:], block=block)
        return graph

    @cached_property
    def essential_graph(self) -> nx.DiGraph:
        """Block graph with stranded vertices removed: the r-blocks on bi-infinite paths."""
        graph = self.block_graph.copy()
        while True:
            stranded = [v for v in graph if graph.in_degree(v) == 0 or graph.out_degree(v) == 0]
            if not stranded:
                return graph
            graph.remove_nodes_from(stranded)

    def blocks(self) -> tuple[str, ...]:
        return self.language(self.step)

    def successors(self, block: str) -> list[str]:
        return sorted(self.essential_graph.successors(block))

    def is_irreducible(self) -> bool:
        graph = self.essential_graph
        return graph.number_of_nodes() > 0 and nx.is_strongly_connected(graph)

    def _factors(self, n: int) -> set[str]:
        graph = self.essential_graph
        r = self.step
        if n <= r:
            return {block[:n] for block in graph}
        words = set(graph)
        for _ in range(n - r):
            words = {w + nxt[-1] for w in words for nxt in graph.successors(w[-r:])}
        return words

    def to_spec(self) -> SFTSpec:
        return SFTSpec(type="sft", step=self.step, forbidden=self.forbidden, alphabet=list(self.alphabet))

    def describe(self) -> str:
        return self.name or f"sft(step={self.step}, |A|={len(self.alphabet)})"


# Substitutions


def validate_rules(rules: Mapping[str, str]):
    """Raises ShiftError for empty rule sets, empty images and images using unknown letters."""
    if not rules:
        raise ShiftError("substitution has no rules")
    letters = set(rules)
    for letter, image in rules.items():
        if len(letter) != 1:
            raise ShiftError(f"substitution keys must be single letters, got {letter!r}")
        if not image:
            raise ShiftError(f"empty image for letter {letter!r}")
        if not set(image) <= letters:
            raise ShiftError(f"image of {letter!r} uses letters without rules: {sorted(set(image) - letters)}")


def substitute(rules: Mapping[str, str], word: str, times: int = 1) -> str:
    for _ in range(times):
        word = "".join(rules[letter] for letter in word)
    return word


def power_rules(rules: Mapping[str, str], k: int) -> dict[str, str]:
    """Rules of σᵏ."""
    return {letter: substitute(rules, letter, k) for letter in sorted(rules)}


def incidence_matrix(rules: Mapping[str, str], alphabet: Iterable[str] | None = None) -> np.ndarray:
    """M[a, c] = number of occurrences of c in σ(a)."""
    letters = list(alphabet) if alphabet is not None else sorted(rules)
    index = {letter: i for i, letter in enumerate(letters)}
    matrix = np.zeros((len(letters), len(letters)), dtype=np.int64)
    for letter in letters:
        for c in rules[letter]:
            matrix[index[letter], index[c]] += 1
    return matrix


def is_positive_power(pattern: np.ndarray, max_power: int) -> bool:
    """True iff some power k ≤ max_power of the 0/1 pattern is entrywise positive."""
    base = (pattern > 0).astype(np.int64)
    current = base.copy()
    for _ in range(max_power):
        if (current > 0).all():
            return True
        current = ((current @ base) > 0).astype(np.int64)
    return False


def is_primitive(rules: Mapping[str, str]) -> bool:
    """True iff some power k ≤ 2·|A|² of the incidence matrix is entrywise positive.

    Raises:
        ShiftError: If the rules are malformed (see validate_rules)
    """
    validate_rules(rules)
    n = len(rules)
    return is_positive_power(incidence_matrix(rules), 2 * n * n)


class SubstitutionShift(ShiftSpace):
    """Shift generated by a primitive substitution."""

    kind = "substitution"

    def __init__(self, rules: Mapping[str, str], name: str | None = None):
        validate_rules(rules)
        self.rules = {letter: rules[letter] for letter in sorted(rules)}
        self.alphabet = tuple(self.rules)
        self.name = name
        if not is_primitive(self.rules):
            raise ShiftError("substitution is not primitive")
        if len(self.alphabet) == 1 and len(self.rules[self.alphabet[0]]) == 1:
            raise ShiftError("substitution a -> a does not grow; use a periodic shift")

    def apply(self, word: str, times: int = 1) -> str:
        return substitute(self.rules, word, times)

    @cached_property
    def incidence(self) -> np.ndarray:
        return incidence_matrix(self.rules)

    @cached_property
    def two_blocks(self) -> frozenset[str]:
        """L(X)∩A², as the closure of 2-factors under w ↦ 2-factors of σ(w)."""
        found = {image[i : i + 2] for image in self.rules.values() for i in range(len(image) - 1)}
        pending = list(found)
        while pending:
            image = self.apply(pending.pop())
            for i in range(len(image) - 1):
                factor = image[i : i + 2]
                if factor not in found:
                    found.add(factor)
                    pending.append(factor)
        return frozenset(found)

    def exponent_for(self, n: int) -> int:
        """Least k with |σᵏ(b)| ≥ n for every letter b."""
        lengths = dict.fromkeys(self.alphabet, 1)
        k = 0
        while min(lengths.values()) < n:
            lengths = {a: sum(lengths[c] for c in self.rules[a]) for a in self.alphabet}
            k += 1
        return k

    def covering_words(self, n: int) -> list[str]:
        # A factor of length n ≤ min |σᵏ(b)| straddles at most two consecutive σᵏ-blocks.
        k = self.exponent_for(n)
        return [self.apply(block, k) for block in sorted(self.two_blocks)]

    def _factors(self, n: int) -> set[str]:
        if n == 1:
            return set(self.alphabet)
        return {word[i : i + n] for word in self.covering_words(n) for i in range(len(word) - n + 1)}

    @cached_property
    def fixed_point_seed(self) -> tuple[str, int]:
        """Least letter a with σᵖ(a) starting with a, and that least p."""
        best = None
        for letter in self.alphabet:
            current, p = self.rules[letter][0], 1
            while current != letter and p <= len(self.alphabet):
                current, p = self.rules[current][0], p + 1
            if current == letter:
                best = (letter, p)
                break
        if best is None:
            raise ShiftError("substitution has no letter starting a periodic first-letter cycle")
        return best

    def point_prefix(self, length: int) -> str:
        letter, p = self.fixed_point_seed
        word = letter
        while len(word) < length:
            word = self.apply(word, p)
        return word[:length]

    @property
    def is_minimal(self) -> bool:
        return True

    def to_spec(self) -> SubstitutionSpec:
        return SubstitutionSpec(type="substitution", rules=dict(self.rules))

    def describe(self) -> str:
        if self.name:
            return self.name
        return "substitution(" + ", ".join(f"{a}->{w}" for a, w in self.rules.items()) + ")"


# Periodic orbits


def primitive_root(word: str) -> str:
    n = len(word)
    for d in range(1, n + 1):
        if n % d == 0 and word[:d] * (n // d) == word:
            return word[:d]
    return word


def normalize_periodic(word: str) -> str:
    """Primitive root in its lexicographically least rotation."""
    root = primitive_root(word)
    return min(root[i:] + root[:i] for i in range(len(root)))


class PeriodicShift(ShiftSpace):
    """The finite orbit of p^∞ for a primitive word p."""

    kind = "periodic"

    def __init__(self, word: str, name: str | None = None):
        if not word:
            raise ShiftError("periodic word must be nonempty")
        self.original = word
        self.word = normalize_periodic(word)
        self.alphabet = tuple(sorted(set(word)))
        self.name = name
        if self.word != word:
            logger.debug(f"Periodic word {word!r} normalized to {self.word!r}")

    @property
    def period(self) -> int:
        return len(self.word)

    def _factors(self, n: int) -> set[str]:
        unrolled = self.word * (n // self.period + 2)
        return {unrolled[i : i + n] for i in range(self.period)}

    def covering_words(self, n: int) -> list[str]:
        return [self.word * (n // self.period + 3)]

    def point_prefix(self, length: int) -> str:
        return (self.word * (length // self.period + 1))[:length]

    def point(self, offset: int = 0) -> PeriodicPoint:
        return PeriodicPoint(self.word, offset)

    def presenting_step(self) -> int:
        """Least r ≥ 1 such that every r-block occurs once per period."""
        r = 1
        while len(self.language(r)) < self.period:
            r += 1
        return r

    def as_sft(self) -> SFTShift:
        """The same orbit presented as a shift of finite type."""
        r = self.presenting_step()
        return SFTShift(self.alphabet, r, self.language(r + 1), name=f"sft({self.describe()})")

    @property
    def is_minimal(self) -> bool:
        return True

    def to_spec(self) -> PeriodicSpec:
        return PeriodicSpec(type="periodic", word=self.word)

    def describe(self) -> str:
        return self.name or f"periodic({self.word})"


def build_shift(spec: ShiftSpecModel, alphabet: Iterable[str] | None = None, name: str | None = None) -> ShiftSpace:
    """Build a shift backend from its spec.

    Raises:
        ShiftError: On malformed SFTs and non-primitive substitutions
    """
    if isinstance(spec, SFTSpec):
        letters = spec.alphabet or (list(alphabet) if alphabet is not None else None)
        if letters is None:
            letters = sorted({letter for word in spec.forbidden for letter in word})
        shift = SFTShift.from_forbidden(letters, spec.step, spec.forbidden, name)
    elif isinstance(spec, SubstitutionSpec):
        shift = SubstitutionShift(spec.rules, name)
    elif isinstance(spec, PeriodicSpec):
        shift = PeriodicShift(spec.word, name)
    else:
        raise ShiftError(f"unsupported shift spec {spec!r}")
    logger.debug(f"Built shift {shift.describe()}")
    return shift
