"""The substitution σ̄ on G×A lifted from an invertible σ, and its primitive components."""

from dataclasses import dataclass

import networkx as nx
from loguru import logger

from group_density.algebra.morphisms import GroupMorphism
from group_density.core.exceptions import InvariantBreachError, PreconditionError
from group_density.shifts.spaces import ShiftSpace, SubstitutionShift, is_primitive, power_rules
from group_density.skew.product import SkewShift
from group_density.subst_tools.invertibility import invertibility_order


@dataclass(frozen=True, eq=False)
class SkewSubstitution:
    """σ̄(g, a) = Ψ(g, σⁿ(a)) over the coded skew alphabet."""

    skew: SkewShift
    power: int
    rules: dict[str, str]
    components: tuple[tuple[str, ...], ...]
    transient: tuple[str, ...]

    def component_rules(self, index: int) -> dict[str, str]:
        return {x: self.rules[x] for x in self.components[index]}

    def component_primitive(self) -> list[bool]:
        return [is_primitive(self.component_rules(i)) for i in range(len(self.components))]

    def labelled_rules(self) -> dict[str, list[str]]:
        coder = self.skew.coder
        return {coder.decode(x): coder.decode_word(image) for x, image in sorted(self.rules.items())}

    def labelled_components(self) -> list[list[str]]:
        return [self.skew.coder.decode_word("".join(component)) for component in self.components]


def _require_substitution(shift: ShiftSpace) -> SubstitutionShift:
    if not isinstance(shift, SubstitutionShift):
        raise PreconditionError(f"skew substitutions need a substitution shift, got {shift.kind}")
    return shift


def skew_substitution(shift: ShiftSpace, phi: GroupMorphism, cap: int | None = None) -> SkewSubstitution:
    """Lift σⁿ to G×A with g₁ = g, g_{i+1} = g_i·φ(b_i), n the invertibility order.

    Components are the closed strongly connected pieces of the letter graph reachable
    from (g, a), a the first letter of the canonical fixed point.

    Raises:
        PreconditionError: If σ is not invertible under φ within the cap
        InvariantBreachError: If a lifted image does not project back onto σⁿ
    """
    shift = _require_substitution(shift)
    result = invertibility_order(shift, phi, cap)
    if result.order is None:
        raise PreconditionError(f"{shift.describe()} is not invertible under φ (searched up to {result.cap})")
    base_rules = power_rules(shift.rules, result.order)
    skew = SkewShift(shift, phi)
    rules = {skew.letter(g, a): skew.lift(g, base_rules[a]) for g, a in skew.pairs}
    for symbol, image in rules.items():
        if skew.project(image) != base_rules[skew.pair(symbol)[1]]:
            raise InvariantBreachError(f"lifted image of {skew.coder.decode(symbol)} does not project onto σ^n")

    graph = nx.DiGraph()
    graph.add_nodes_from(rules)
    graph.add_edges_from((x, y) for x, image in rules.items() for y in image)
    seed, _ = shift.fixed_point_seed
    reachable = set()
    for g in phi.group.elements:
        start = skew.letter(g, seed)
        reachable |= {start} | nx.descendants(graph, start)
    condensed = nx.condensation(graph.subgraph(reachable))
    closed = [
        tuple(sorted(condensed.nodes[node]["members"], key=skew.alphabet.index))
        for node in condensed.nodes
        if condensed.out_degree(node) == 0
    ]
    closed.sort(key=lambda component: skew.alphabet.index(component[0]))
    in_component = {x for component in closed for x in component}
    transient = tuple(x for x in skew.alphabet if x in reachable and x not in in_component)
    logger.debug(f"skew substitution of {shift.describe()}: power {result.order}, {len(closed)} components")
    return SkewSubstitution(skew, result.order, rules, tuple(closed), transient)


@dataclass(frozen=True)
class ComponentsReport:
    power: int
    count: int
    primitive: list[bool]
    components: list[list[str]]


def skew_components_report(shift: ShiftSpace, phi: GroupMorphism, cap: int | None = None) -> ComponentsReport:
    lifted = skew_substitution(shift, phi, cap)
    return ComponentsReport(
        lifted.power, len(lifted.components), lifted.component_primitive(), lifted.labelled_components()
    )
