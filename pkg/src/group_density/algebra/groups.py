"""Finite groups as Cayley tables, and their constructors.

Elements are indices ``0..order-1``. Products are read left to right and
permutations act on the right: ``mul(s, t)`` is "apply s, then t".
"""

import random
import re
from collections.abc import Callable, Hashable, Iterable, Sequence
from dataclasses import dataclass
from itertools import product as cartesian

from loguru import logger

from group_density.core.config import settings
from group_density.core.exceptions import GroupError
from group_density.schemas.group import (
    CyclicGroupSpec,
    GroupSpec,
    MatrixGroupSpec,
    PermutationGroupSpec,
    ProductGroupSpec,
    SymmetricGroupSpec,
    TableGroupSpec,
)

Permutation = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A validated finite group given by its multiplication table."""

    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    element_labels: tuple[str, ...]
    name: str = "group"

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def product(self, elements: Iterable[int]) -> int:
        result = self.identity
        for g in elements:
            result = self.table[result][g]
        return result

    def conjugate(self, g: int, h: int) -> int:
        """Return g·h·g⁻¹."""
        return self.table[self.table[g][h]][self.inverse[g]]

    def element_order(self, g: int) -> int:
        k, power = 1, g
        while power != self.identity:
            power = self.table[power][g]
            k += 1
        return k

    def label(self, g: int) -> str:
        return self.element_labels[g]

    def element(self, ref: str | int) -> int:
        """Resolve an element label (or a raw index) to its index."""
        if isinstance(ref, int) and not isinstance(ref, bool):
            if 0 <= ref < self.order:
                return ref
            raise GroupError(f"element index {ref} out of range for {self.name} of order {self.order}")
        try:
            return self.element_labels.index(ref)
        except ValueError:
            normalized = _normalize_label(ref)
            for index, label in enumerate(self.element_labels):
                if _normalize_label(label) == normalized:
                    return index
        raise GroupError(f"unknown element label {ref!r} in {self.name}")

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None, name: str = "group"):
        """Validate a Cayley table and build the group.

        Raises:
            GroupError: If the table is not square, not a Latin square, has no identity or is not associative
        """
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("multiplication table must be a non-empty square")
        full = set(range(n))
        for row in table:
            if set(row) != full:
                raise GroupError("multiplication table rows must be permutations of the elements")
        for j in range(n):
            if {table[i][j] for i in range(n)} != full:
                raise GroupError("multiplication table columns must be permutations of the elements")

        identity = next((e for e in range(n) if list(table[e]) == list(range(n))), None)
        if identity is None or any(table[i][identity] != i for i in range(n)):
            raise GroupError("multiplication table has no identity element")

        _check_associative(table)
        inverse = tuple(next(h for h in range(n) if table[g][h] == identity) for g in range(n))
        labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        return cls(
            table=tuple(tuple(row) for row in table),
            identity=identity,
            inverse=inverse,
            element_labels=labels,
            name=name,
        )


def _normalize_label(label: str) -> str:
    return re.sub(r"\s+", " ", label.strip())


def _check_associative(table: Sequence[Sequence[int]]):
    n = len(table)
    if n <= settings.ASSOCIATIVITY_EXHAUSTIVE_MAX:
        triples = cartesian(range(n), repeat=3)
    else:
        rng = random.Random(0)
        triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(settings.ASSOCIATIVITY_SAMPLES))
    for a, b, c in triples:
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise GroupError(f"multiplication table is not associative at ({a}, {b}, {c})")


def closure(generators: Sequence[Hashable], mul: Callable, identity: Hashable) -> list:
    """Breadth-first closure from the identity over the sorted generators."""
    gens = sorted(set(generators))
    elements = [identity]
    seen = {identity}
    queue_index = 0
    while queue_index < len(elements):
        current = elements[queue_index]
        queue_index += 1
        for gen in gens:
            nxt = mul(current, gen)
            if nxt not in seen:
                seen.add(nxt)
                elements.append(nxt)
                if len(elements) > settings.GROUP_ORDER_CAP:
                    raise GroupError(f"group order exceeds the cap of {settings.GROUP_ORDER_CAP} elements")
    return elements


def _from_elements(elements: list, mul: Callable, labels: list[str], name: str) -> FiniteGroup:
    index = {element: i for i, element in enumerate(elements)}
    try:
        table = [[index[mul(a, b)] for b in elements] for a in elements]
    except KeyError as e:
        raise GroupError(f"generated set of {name} is not closed under multiplication") from e
    return FiniteGroup.from_table(table, labels, name)


# Permutations


def compose(first: Permutation, second: Permutation) -> Permutation:
    """Apply ``first`` then ``second`` (0-based one-line notation)."""
    return tuple(second[i] for i in first)


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse cycle notation such as "(1 2)(3 4)" into a 0-based one-line permutation."""
    image = list(range(degree))
    seen: set[int] = set()
    for cycle in re.findall(r"\(([^()]*)\)", text):
        points = [int(token) for token in re.split(r"[\s,]+", cycle.strip()) if token]
        for point in points:
            if not 1 <= point <= degree:
                raise GroupError(f"point {point} outside 1..{degree} in {text!r}")
            if point in seen:
                raise GroupError(f"repeated point {point} in {text!r}")
            seen.add(point)
        for a, b in zip(points, points[1:] + points[:1], strict=True):
            image[a - 1] = b - 1
    return tuple(image)


def one_line(images: Sequence[int], degree: int) -> Permutation:
    """Validate 1-based one-line images and return the 0-based permutation."""
    if len(images) != degree:
        raise GroupError(f"permutation {list(images)} does not have degree {degree}")
    if sorted(images) != list(range(1, degree + 1)):
        raise GroupError(f"permutation {list(images)} has repeated or missing points")
    return tuple(i - 1 for i in images)


def cycle_notation(perm: Permutation) -> str:
    seen: set[int] = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle, point = [], start
        while point not in seen:
            seen.add(point)
            cycle.append(str(point + 1))
            point = perm[point]
        cycles.append("(" + " ".join(cycle) + ")")
    return "".join(cycles) or "()"


def permutation_group(generators: Sequence[Permutation], degree: int, name: str) -> FiniteGroup:
    identity = tuple(range(degree))
    elements = closure(generators, compose, identity)
    return _from_elements(elements, compose, [cycle_notation(p) for p in elements], name)


def symmetric_group(n: int) -> FiniteGroup:
    gens = set()
    if n >= 2:
        gens.add(tuple([1, 0] + list(range(2, n))))
        gens.add(tuple(list(range(1, n)) + [0]))
    return permutation_group(sorted(gens), n, f"S{n}")


def cyclic_group(n: int) -> FiniteGroup:
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup.from_table(table, [str(i) for i in range(n)], f"Z/{n}Z")


# Matrices


def _matrix_mul(modulus: int) -> Callable[[Matrix, Matrix], Matrix]:
    def mul(a: Matrix, b: Matrix) -> Matrix:
        size = len(a)
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(size)) % modulus for j in range(size)) for i in range(size)
        )

    return mul


def matrix_label(m: Matrix) -> str:
    return "[" + ",".join("[" + ",".join(str(x) for x in row) + "]" for row in m) + "]"


def matrix_group(generators: Sequence[Sequence[Sequence[int]]], modulus: int) -> FiniteGroup:
    size = len(generators[0])
    gens = []
    for gen in generators:
        if len(gen) != size or any(len(row) != size for row in gen):
            raise GroupError("matrix generators must be square and of equal size")
        gens.append(tuple(tuple(x % modulus for x in row) for row in gen))
    identity = tuple(tuple(int(i == j) for j in range(size)) for i in range(size))
    mul = _matrix_mul(modulus)
    elements = closure(gens, mul, identity)
    return _from_elements(elements, mul, [matrix_label(m) for m in elements], f"GL({size},Z/{modulus}Z)-subgroup")


def direct_product(factors: Sequence[FiniteGroup]) -> FiniteGroup:
    elements = list(cartesian(*(f.elements for f in factors)))
    if len(elements) > settings.GROUP_ORDER_CAP:
        raise GroupError(f"group order exceeds the cap of {settings.GROUP_ORDER_CAP} elements")

    def mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(f.mul(x, y) for f, x, y in zip(factors, a, b, strict=True))

    labels = ["(" + ",".join(f.label(x) for f, x in zip(factors, e, strict=True)) + ")" for e in elements]
    return _from_elements(elements, mul, labels, " x ".join(f.name for f in factors))


def build_group(spec: GroupSpec) -> FiniteGroup:
    """Build and validate a group from its spec.

    Raises:
        GroupError: On malformed generators, non-associative tables or order overflow
    """
    if isinstance(spec, CyclicGroupSpec):
        if spec.n > settings.GROUP_ORDER_CAP:
            raise GroupError(f"group order exceeds the cap of {settings.GROUP_ORDER_CAP} elements")
        group = cyclic_group(spec.n)
    elif isinstance(spec, SymmetricGroupSpec):
        group = symmetric_group(spec.n)
    elif isinstance(spec, PermutationGroupSpec):
        gens = [
            parse_cycles(g, spec.degree) if isinstance(g, str) else one_line(g, spec.degree) for g in spec.generators
        ]
        group = permutation_group(gens, spec.degree, f"<{len(gens)} permutations on {spec.degree} points>")
    elif isinstance(spec, TableGroupSpec):
        if len(spec.table) > settings.GROUP_ORDER_CAP:
            raise GroupError(f"group order exceeds the cap of {settings.GROUP_ORDER_CAP} elements")
        group = FiniteGroup.from_table(spec.table, name="table")
    elif isinstance(spec, MatrixGroupSpec):
        group = matrix_group(spec.generators, spec.modulus)
    elif isinstance(spec, ProductGroupSpec):
        group = direct_product([build_group(f) for f in spec.factors])
    else:
        raise GroupError(f"unsupported group spec {spec!r}")
    logger.debug(f"Built group {group.name} of order {group.order}")
    return group
