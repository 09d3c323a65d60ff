"""Slice measures μ(L∩Aⁱ) for L = φ⁻¹(K) and their Cesàro averages."""

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np
import sympy
from loguru import logger

from group_density.algebra.morphisms import GroupMorphism
from group_density.core.config import settings
from group_density.core.exceptions import GroupError, PreconditionError
from group_density.measures.base import CylinderMeasure
from group_density.measures.markov import MarkovMeasure
from group_density.measures.periodic import PeriodicMeasure
from group_density.measures.substitution import SubstitutionMeasure
from group_density.shifts.spaces import ShiftSpace

EXACT = "exact"
TRANSPORTED = "transported"


@dataclass(frozen=True, eq=False)
class DensityQuery:
    """Shift, measure, morphism and target set K ⊆ G."""

    shift: ShiftSpace
    measure: CylinderMeasure
    morphism: GroupMorphism
    target: frozenset[int]

    def __post_init__(self):
        if not self.target:
            raise GroupError("target set K must be nonempty")
        bad = [g for g in self.target if not 0 <= g < self.morphism.group.order]
        if bad:
            raise GroupError(f"target set contains non-elements {bad}")

    @classmethod
    def build(cls, shift, measure, morphism, target) -> "DensityQuery":
        group = morphism.group
        return cls(shift, measure, morphism, frozenset(group.element(k) for k in target))

    @cached_property
    def indicator(self) -> np.ndarray:
        mask = np.zeros(self.morphism.group.order, dtype=bool)
        mask[list(self.target)] = True
        return mask

    def in_target(self, word: str) -> bool:
        return self.morphism.word_image(word) in self.target


@dataclass
class SliceSeries:
    """μ(L∩Aⁱ) for i < N; ``methods[i]`` says how entry i was obtained."""

    values: np.ndarray
    methods: list[str]
    exact: list[sympy.Rational] | None = None

    def __len__(self) -> int:
        return len(self.values)


def brute_force_slice(query: DensityQuery, i: int) -> float:
    """Σ μ(w) over w ∈ L(X)∩Aⁱ with φ(w) ∈ K, by enumeration."""
    return math.fsum(query.measure.value(w) for w in query.shift.language(i) if query.in_target(w))


def _right_multiplication(morphism: GroupMorphism) -> dict[str, np.ndarray]:
    group = morphism.group
    return {
        a: np.array([group.mul(g, morphism.image(a)) for g in group.elements], dtype=np.int64)
        for a in morphism.alphabet
    }


def _markov_series(query: DensityQuery, measure: MarkovMeasure, horizon: int) -> SliceSeries:
    """Forward recursion on (r-block, g) states weighted by π·∏P."""
    group, phi = query.morphism.group, query.morphism
    r = measure.step
    states = measure.states
    index = {u: k for k, u in enumerate(states)}
    values = np.zeros(horizon)
    for i in range(min(r, horizon)):
        values[i] = math.fsum(p for u, p in measure.pi.items() if phi.word_image(u[:i]) in query.target)
    mult = _right_multiplication(phi)
    edges = [
        (index[u], index[(u + a)[1:]], mult[a], p)
        for u, row in measure.transitions.items()
        for a, p in row.items()
        if p > 0
    ]
    current = np.zeros((len(states), group.order))
    for u, p in measure.pi.items():
        current[index[u], phi.word_image(u)] += p
    for i in range(r, horizon):
        values[i] = current[:, query.indicator].sum()
        nxt = np.zeros_like(current)
        for src, dst, perm, p in edges:
            nxt[dst, perm] += p * current[src]
        current = nxt
    return SliceSeries(values, [EXACT] * horizon)


def _periodic_series(query: DensityQuery, measure: PeriodicMeasure, horizon: int) -> SliceSeries:
    group, phi = query.morphism.group, query.morphism
    word = measure.shift.word
    p = len(word)
    running = [group.identity] * p
    exact = []
    for i in range(horizon):
        exact.append(sympy.Rational(sum(1 for g in running if g in query.target), p))
        running = [group.mul(g, phi.image(word[(s + i) % p])) for s, g in enumerate(running)]
    return SliceSeries(np.array([float(v) for v in exact]), [EXACT] * horizon, exact)


def _prefix_products(morphism: GroupMorphism, text: str) -> np.ndarray:
    group = morphism.group
    products = np.empty(len(text) + 1, dtype=np.int64)
    g = group.identity
    products[0] = g
    for j, letter in enumerate(text):
        g = group.mul(g, morphism.image(letter))
        products[j + 1] = g
    return products


def _substitution_series(query: DensityQuery, measure: SubstitutionMeasure, horizon: int) -> SliceSeries:
    """Exact sums over the length-M distribution for i ≤ M, transport along the fixed point beyond."""
    group, phi = query.morphism.group, query.morphism
    exact_length = min(settings.SLICE_EXACT_MAX_LENGTH, max(horizon - 1, 0))
    distribution = measure.distribution(exact_length)
    words = sorted(distribution)
    weights = np.array([distribution[w] for w in words])
    prefixes = np.array([_prefix_products(phi, w) for w in words], dtype=np.int64)
    values = np.zeros(horizon)
    methods = []
    for i in range(min(horizon, exact_length + 1)):
        values[i] = weights[query.indicator[prefixes[:, i]]].sum()
        methods.append(EXACT)
    if horizon > exact_length + 1:
        length = max(settings.ERGODIC_SAMPLE_LENGTH, 4 * horizon)
        logger.debug(f"transporting slices {exact_length + 1}..{horizon - 1} along a prefix of length {length}")
        products = _prefix_products(phi, query.shift.point_prefix(length))
        order = group.order
        hits = np.array([[group.mul(group.inv(g), h) in query.target for h in group.elements] for g in group.elements])
        hits = hits.reshape(-1)
        for i in range(exact_length + 1, horizon):
            pairs = products[: len(products) - i] * order + products[i:]
            counts = np.bincount(pairs, minlength=order * order)
            values[i] = counts[hits].sum() / len(pairs)
            methods.append(TRANSPORTED)
    return SliceSeries(values, methods)


def slice_series(query: DensityQuery, horizon: int) -> SliceSeries:
    """μ(L∩Aⁱ) for 0 ≤ i < horizon.

    Raises:
        PreconditionError: If the measure backend has no slice recursion
    """
    measure = query.measure
    if isinstance(measure, MarkovMeasure):
        return _markov_series(query, measure, horizon)
    if isinstance(measure, PeriodicMeasure):
        return _periodic_series(query, measure, horizon)
    if isinstance(measure, SubstitutionMeasure):
        return _substitution_series(query, measure, horizon)
    raise PreconditionError(f"no slice recursion for the {measure.backend} backend")


def slice_measure(query: DensityQuery, i: int) -> float:
    """μ(L∩Aⁱ)."""
    if i < 0:
        raise PreconditionError("slice length must be nonnegative")
    return float(slice_series(query, i + 1).values[i])


@dataclass(frozen=True)
class CesaroEstimate:
    horizon: int
    value: float
    exact: sympy.Rational | None
    oscillation_min: float
    oscillation_max: float
    transported: int = 0
    series: list[float] = field(default_factory=list, repr=False)

    @property
    def oscillation(self) -> float:
        return self.oscillation_max - self.oscillation_min


def cesaro_density(query: DensityQuery, horizon: int | None = None) -> CesaroEstimate:
    """(1/N)·Σ_{i<N} μ(L∩Aⁱ), with the range of the running average over the last quarter."""
    horizon = horizon or settings.CESARO_HORIZON
    if horizon < 1:
        raise PreconditionError("the Cesàro horizon must be at least 1")
    series = slice_series(query, horizon)
    running = np.cumsum(series.values) / np.arange(1, horizon + 1)
    tail = running[(3 * horizon) // 4 :]
    exact = sum(series.exact, sympy.Integer(0)) / horizon if series.exact is not None else None
    return CesaroEstimate(
        horizon,
        math.fsum(series.values) / horizon,
        exact,
        float(tail.min()),
        float(tail.max()),
        series.methods.count(TRANSPORTED),
        series.values.tolist(),
    )
