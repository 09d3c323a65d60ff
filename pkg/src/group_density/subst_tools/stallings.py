"""Stallings folding for finitely generated subgroups of the free group F_A.

A free-group word is a tuple of ``(letter, exponent)`` pairs with exponent ±1.
In text form an inverse letter is written with a trailing ``-``, so ``"ab-"``
is a·b⁻¹.
"""

from collections import deque
from collections.abc import Iterable
from dataclasses import dataclass
from functools import cached_property

import sympy
from networkx.utils import UnionFind

from group_density.core.exceptions import UnknownLetterError
from group_density.core.logging import evidence_logger
from group_density.shifts.returns import return_words
from group_density.shifts.spaces import ShiftSpace, SubstitutionShift, incidence_matrix

FreeWord = tuple[tuple[str, int], ...]

BASE = 0


def parse_free_word(text: str) -> FreeWord:
    letters: list[tuple[str, int]] = []
    for ch in text:
        if ch == "-":
            if not letters or letters[-1][1] == -1:
                raise UnknownLetterError(f"misplaced inverse marker in {text!r}")
            letters[-1] = (letters[-1][0], -1)
        else:
            letters.append((ch, 1))
    return free_reduce(letters)


def free_reduce(word: Iterable[tuple[str, int]]) -> FreeWord:
    stack: list[tuple[str, int]] = []
    for letter, exp in word:
        if stack and stack[-1] == (letter, -exp):
            stack.pop()
        else:
            stack.append((letter, exp))
    return tuple(stack)


def format_free_word(word: FreeWord) -> str:
    return "".join(letter if exp == 1 else f"{letter}-" for letter, exp in word)


def inverse(word: FreeWord) -> FreeWord:
    return tuple((letter, -exp) for letter, exp in reversed(word))


def _as_free(word: str | FreeWord) -> FreeWord:
    return parse_free_word(word) if isinstance(word, str) else free_reduce(word)


@dataclass(frozen=True, eq=False)
class StallingsGraph:
    """Folded graph with base vertex 0; edges ``(u, letter, v)`` read u --letter--> v."""

    vertices: frozenset[int]
    edges: frozenset[tuple[int, str, int]]

    @property
    def rank(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @cached_property
    def _out(self) -> dict[tuple[int, str], int]:
        return {(u, a): v for u, a, v in self.edges}

    @cached_property
    def _in(self) -> dict[tuple[int, str], int]:
        return {(v, a): u for u, a, v in self.edges}

    def is_folded(self) -> bool:
        return len(self._out) == len(self.edges) == len(self._in)

    def contains(self, word: str | FreeWord) -> bool:
        """w ∈ ⟨W⟩ iff w reads a loop at the base vertex."""
        vertex = BASE
        for letter, exp in _as_free(word):
            table = self._out if exp == 1 else self._in
            vertex = table.get((vertex, letter))
            if vertex is None:
                return False
        return vertex == BASE

    def is_whole_group(self, alphabet: Iterable[str]) -> bool:
        """True iff the graph is the rose on ``alphabet``, i.e. ⟨W⟩ = F_A."""
        letters = sorted(set(alphabet))
        return self.vertices == {BASE} and sorted(a for _, a, _ in self.edges) == letters

    def basis(self) -> list[FreeWord]:
        """Free basis read off a breadth-first spanning tree: one loop per non-tree edge."""
        paths: dict[int, FreeWord] = {BASE: ()}
        tree = set()
        queue = deque([BASE])
        ordered = sorted(self.edges)
        while queue:
            vertex = queue.popleft()
            for edge in ordered:
                u, a, v = edge
                if u == vertex and v not in paths:
                    paths[v] = paths[u] + ((a, 1),)
                elif v == vertex and u not in paths:
                    paths[u] = paths[v] + ((a, -1),)
                else:
                    continue
                tree.add(edge)
                queue.append(v if u == vertex else u)
        return [
            free_reduce(paths[u] + ((a, 1),) + inverse(paths[v])) for u, a, v in ordered if (u, a, v) not in tree
        ]

    def edge_list(self) -> list[list]:
        return [[u, a, v] for u, a, v in sorted(self.edges)]


def stallings_subgroup(words: Iterable[str | FreeWord]) -> StallingsGraph:
    """Fold the bouquet of the given words into the Stallings graph of ⟨W⟩."""
    edges: set[tuple[int, str, int]] = set()
    next_vertex = BASE + 1
    for raw in words:
        word = _as_free(raw)
        if not word:
            continue
        vertex = BASE
        for i, (letter, exp) in enumerate(word):
            target = BASE if i == len(word) - 1 else next_vertex
            if target != BASE:
                next_vertex += 1
            edges.add((vertex, letter, target) if exp == 1 else (target, letter, vertex))
            vertex = target

    classes = UnionFind(range(next_vertex))
    changed = True
    while changed:
        changed = False
        out: dict[tuple[int, str], int] = {}
        into: dict[tuple[int, str], int] = {}
        for u, a, v in edges:
            u, v = classes[u], classes[v]
            for table, key, value in ((out, (u, a), v), (into, (v, a), u)):
                known = table.get(key)
                if known is None:
                    table[key] = value
                elif classes[known] != classes[value]:
                    classes.union(known, value)
                    changed = True
        edges = {(classes[u], a, classes[v]) for u, a, v in edges}

    root = classes[BASE]
    relabel = {root: BASE}
    for vertex in sorted({classes[x] for x in range(next_vertex)}):
        relabel.setdefault(vertex, len(relabel))
    folded = frozenset((relabel[u], a, relabel[v]) for u, a, v in edges)
    vertices = frozenset({BASE} | {u for u, _, _ in folded} | {v for _, _, v in folded})
    return StallingsGraph(vertices, folded)


@dataclass(frozen=True)
class ReturnBasisReport:
    word: str
    returns: tuple[str, ...]
    rank: int
    basis: bool
    complete: bool


def return_basis_check(shift: ShiftSpace, w: str, cap: int | None = None) -> ReturnBasisReport:
    """Rank of ⟨R_X(w)⟩ and whether R_X(w) is a basis of F_A."""
    cert = return_words(shift, w, cap)
    graph = stallings_subgroup(cert.returns)
    size = len(shift.alphabet)
    basis = len(cert.returns) == size and graph.rank == size
    evidence_logger("return_basis_check").info(f"w={w!r}: {len(cert.returns)} returns, rank {graph.rank}")
    return ReturnBasisReport(w, cert.returns, graph.rank, basis, cert.complete)


@dataclass(frozen=True)
class FreeInvertibility:
    invertible: bool
    determinant: int
    reason: str


def free_group_invertible(shift: SubstitutionShift) -> FreeInvertibility:
    """Whether σ extends to an automorphism of F_A.

    The abelianized determinant must be ±1. Past that test, σ is an automorphism iff
    its images generate F_A (free groups of finite rank are Hopfian), which the folded
    graph of the images decides.
    """
    determinant = int(sympy.Matrix(incidence_matrix(shift.rules).tolist()).det())
    if abs(determinant) != 1:
        return FreeInvertibility(False, determinant, f"abelianized determinant is {determinant}")
    graph = stallings_subgroup(shift.rules.values())
    if graph.is_whole_group(shift.alphabet):
        return FreeInvertibility(True, determinant, "images generate the free group")
    return FreeInvertibility(False, determinant, f"images generate a proper subgroup of rank {graph.rank}")
