"""Extension graphs E(w) and the dendric check."""

from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from group_density.shifts.spaces import ShiftSpace


@dataclass(frozen=True)
class ExtensionGraph:
    """Bipartite graph on left extensions L(w) and right extensions R(w) of w."""

    word: str
    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @cached_property
    def graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(("L", a) for a in self.left)
        graph.add_nodes_from(("R", b) for b in self.right)
        graph.add_edges_from((("L", a), ("R", b)) for a, b in self.edges)
        return graph

    def is_connected(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_connected(self.graph)

    def is_tree(self) -> bool:
        return self.graph.number_of_nodes() > 0 and nx.is_tree(self.graph)

    def components(self) -> list[list[str]]:
        """Connected components with vertices rendered as 'a·' (left) and '·b' (right)."""
        rendered = []
        for component in nx.connected_components(self.graph):
            rendered.append(sorted(f"{v}·" if side == "L" else f"·{v}" for side, v in component))
        return sorted(rendered)


def extension_graph(shift: ShiftSpace, w: str) -> ExtensionGraph:
    """E(w) from the words of length |w|+2.

    Raises:
        WordNotInLanguageError: If w is not in L(X)
    """
    shift.require_word(w)
    n = len(w)
    edges = sorted({(word[0], word[-1]) for word in shift.language(n + 2) if word[1 : n + 1] == w})
    return ExtensionGraph(
        word=w,
        left=tuple(sorted({a for a, _ in edges})),
        right=tuple(sorted({b for _, b in edges})),
        edges=tuple(edges),
    )


@dataclass(frozen=True)
class DendricCheck:
    dendric: bool
    checked_up_to: int
    witness: str | None = None


def dendric_up_to(shift: ShiftSpace, n: int) -> DendricCheck:
    """Whether E(w) is a tree for every w ∈ L(X) with |w| ≤ n; else the shortest failing w."""
    for length in range(n + 1):
        for w in shift.language(length):
            if not extension_graph(shift, w).is_tree():
                return DendricCheck(False, n, w)
    return DendricCheck(True, n)
