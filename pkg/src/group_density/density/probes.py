"""Worked probes: Fibonacci slice oscillation, continued-fraction denominators, periodic families."""

import json
from dataclasses import dataclass

import sympy

from group_density.algebra.groups import cyclic_group, matrix_group
from group_density.algebra.morphisms import GroupMorphism
from group_density.core.exceptions import PreconditionError
from group_density.density.exact import ExactDensity, exact_density
from group_density.density.slices import DensityQuery, slice_series
from group_density.measures import build_measure
from group_density.shifts.spaces import PeriodicShift, SubstitutionShift

FIBONACCI_RULES = {"a": "ab", "b": "a"}


def fibonacci_number(n: int) -> int:
    """F(0) = 0, F(1) = 1."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


@dataclass(frozen=True)
class ProbeRow:
    index: int
    length: int
    value: float
    majority_even: bool


@dataclass(frozen=True)
class FibonacciProbe:
    """Slices μ(L∩A^{F(m)}) for L = {w : |w|_a even} on the Fibonacci shift."""

    rows: list[ProbeRow]

    def column(self, offset: int) -> list[ProbeRow]:
        """Rows with m = 4n + offset, n ≥ 1."""
        return [row for row in self.rows if row.index >= 4 and row.index % 4 == offset]

    def by_parity(self, even: bool) -> list[float]:
        return [row.value for row in self.rows if row.majority_even == even]

    @property
    def oscillation(self) -> float:
        tail = [row.value for row in self.rows[-3:]]
        return max(tail) - min(tail)


def fibonacci_probe(terms: int = 4) -> FibonacciProbe:
    """Slices at every Fibonacci length F(m), 3 ≤ m ≤ 4·terms + 2.

    Most words of length F(m) contain exactly F(m−1) letters a, so the slice is
    close to 1 when F(m−1) is even and close to 0 otherwise.
    """
    if terms < 1:
        raise PreconditionError("the probe needs at least one term")
    shift = SubstitutionShift(FIBONACCI_RULES, name="fibonacci")
    phi = GroupMorphism.from_mapping(cyclic_group(2), {"a": 1, "b": 0})
    query = DensityQuery.build(shift, build_measure(shift), phi, [0])
    top = 4 * terms + 2
    series = slice_series(query, fibonacci_number(top) + 1)
    rows = [
        ProbeRow(m, fibonacci_number(m), float(series.values[fibonacci_number(m)]), fibonacci_number(m - 1) % 2 == 0)
        for m in range(3, top + 1)
    ]
    return FibonacciProbe(rows)


@dataclass(frozen=True)
class ContinuedFractionDemo:
    exact_zero: ExactDensity
    exact_one: ExactDensity
    empirical_zero: float
    terms: int


def continued_fraction_demo(terms: int = 10_000, modulus: int = 2) -> ContinuedFractionDemo:
    """Parity of continued-fraction denominators q_n along the Fibonacci word on {1, 2}.

    φ(k) = [[0,1],[1,k]] mod 2 into GL(2,ℤ/2ℤ); q_n is the lower-right entry of
    φ(x₁…xₙ), so K₀ = {g : g₂₂ = 0} collects the events q_n ≡ 0.
    """
    if modulus != 2:
        raise PreconditionError("the continued-fraction demo is implemented for modulus 2")
    group = matrix_group([[[0, 1], [1, 1]], [[0, 1], [1, 0]]], modulus)
    shift = SubstitutionShift({"1": "12", "2": "1"}, name="fibonacci-partial-quotients")
    phi = GroupMorphism.from_mapping(group, {"1": "[[0,1],[1,1]]", "2": "[[0,1],[1,0]]"})
    zero = [g for g in group.elements if json.loads(group.label(g))[1][1] == 0]
    one = [g for g in group.elements if g not in zero]
    measure = build_measure(shift)
    exact_zero = exact_density(DensityQuery.build(shift, measure, phi, zero))
    exact_one = exact_density(DensityQuery.build(shift, measure, phi, one))

    quotients = shift.point_prefix(terms)
    q_prev, q = 0, 1
    zeros = 0
    for x in quotients:
        q_prev, q = q, (int(x) * q + q_prev) % modulus
        zeros += q == 0
    return ContinuedFractionDemo(exact_zero, exact_one, zeros / terms, terms)


def periodic_family(n: int, modulus: int = 2) -> tuple[PeriodicShift, GroupMorphism]:
    """(a₀…a_{n−1})^∞ with φ(a_{n−1}) = 0 and φ(aᵢ) = 1 otherwise, into ℤ/mℤ; letters are a, b, c, …

    One period maps to n − 1. With ``modulus=n`` that is a generator, the skew product is a single
    periodic orbit and every class has density 1/n. The default ``modulus=2`` counts parity instead:
    for odd n the period maps to 0, there are two minimal subsets, and n = 3 gives 5/9 through the
    masses (2/3, 1/3).
    """
    if not 2 <= n <= 26:
        raise PreconditionError("the periodic family is defined for 2 ≤ n ≤ 26 letters")
    letters = [chr(ord("a") + i) for i in range(n)]
    shift = PeriodicShift("".join(letters), name=f"periodic-{n}")
    mapping = {a: (0 if i == n - 1 else 1) for i, a in enumerate(letters)}
    return shift, GroupMorphism.from_mapping(cyclic_group(modulus), mapping)


def periodic_family_density(n: int, modulus: int = 2) -> sympy.Rational | None:
    shift, phi = periodic_family(n, modulus)
    query = DensityQuery.build(shift, build_measure(shift), phi, [0])
    return exact_density(query).rational
