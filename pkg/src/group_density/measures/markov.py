"""Stationary Markov measures on shifts of finite type, including the Parry measure."""

import math
from collections.abc import Mapping

import numpy as np
import sympy
from loguru import logger

from group_density.core.config import settings
from group_density.core.exceptions import MeasureError, ReducibleShiftError
from group_density.measures.base import CylinderMeasure
from group_density.measures.perron import perron_vector
from group_density.schemas.shift import MarkovMeasureModel
from group_density.shifts.spaces import SFTShift

Probability = float | str


class MarkovMeasure(CylinderMeasure):
    """r-step Markov measure: μ(w) = π(w[0,r))·∏ P(w[i,i+r) → w[i+r])."""

    def __init__(
        self,
        shift: SFTShift,
        pi: Mapping[str, float],
        transitions: Mapping[str, Mapping[str, float]],
        exact_pi: Mapping[str, sympy.Rational] | None = None,
        exact_transitions: Mapping[str, Mapping[str, sympy.Rational]] | None = None,
        backend: str = "markov",
    ):
        self.shift = shift
        self.step = shift.step
        self.states = tuple(sorted(pi))
        self.pi = dict(pi)
        self.transitions = {u: dict(row) for u, row in transitions.items()}
        self.exact_pi = dict(exact_pi) if exact_pi is not None else None
        self.exact_transitions = (
            {u: dict(row) for u, row in exact_transitions.items()} if exact_transitions is not None else None
        )
        self.backend = backend

    @property
    def is_rational(self) -> bool:
        return self.exact_pi is not None and self.exact_transitions is not None

    def value(self, word: str) -> float:
        r = self.step
        if len(word) < r:
            return sum(p for u, p in self.pi.items() if u.startswith(word))
        mu = self.pi.get(word[:r], 0.0)
        for i in range(len(word) - r):
            mu *= self.transitions.get(word[i : i + r], {}).get(word[i + r], 0.0)
            if mu == 0.0:
                break
        return mu

    def rational_value(self, word: str) -> sympy.Rational | None:
        if not self.is_rational:
            return None
        r = self.step
        zero = sympy.Integer(0)
        if len(word) < r:
            return sum((p for u, p in self.exact_pi.items() if u.startswith(word)), zero)
        mu = self.exact_pi.get(word[:r], zero)
        for i in range(len(word) - r):
            mu *= self.exact_transitions.get(word[i : i + r], {}).get(word[i + r], zero)
        return mu

    def block_matrix(self) -> np.ndarray:
        """Transition matrix of the induced chain on r-blocks, rows indexed like ``states``."""
        index = {u: i for i, u in enumerate(self.states)}
        matrix = np.zeros((len(self.states), len(self.states)))
        for u, row in self.transitions.items():
            for letter, p in row.items():
                matrix[index[u], index[(u + letter)[1:]]] = p
        return matrix

    def entropy(self) -> float:
        """Entropy rate −Σ_u π(u) Σ_a P(u→a) log P(u→a)."""
        total = 0.0
        for u, row in self.transitions.items():
            total -= self.pi[u] * sum(p * math.log(p) for p in row.values() if p > 0)
        return total


def parse_probability(value: Probability) -> tuple[float, sympy.Rational | None]:
    """Float value and, when the input is an exact decimal or 'p/q', its rational form."""
    try:
        exact = sympy.Rational(value) if isinstance(value, str) else sympy.Rational(repr(float(value)))
    except (TypeError, ValueError) as e:
        raise MeasureError(f"cannot parse probability {value!r}") from e
    return float(exact), exact


def _present_with_step(shift: SFTShift, step: int) -> SFTShift:
    if step == shift.step:
        return shift
    if step < shift.step:
        raise MeasureError(f"a {step}-step Markov measure cannot live on a {shift.step}-step SFT")
    return SFTShift(shift.alphabet, step, shift.language(step + 1), name=shift.describe())


def _require_irreducible(shift: SFTShift):
    if not shift.is_irreducible():
        raise ReducibleShiftError(f"{shift.describe()} is reducible; its stationary Markov measures are not unique")


def _stationary_exact(states: tuple[str, ...], rows: Mapping[str, Mapping[str, sympy.Rational]]):
    index = {u: i for i, u in enumerate(states)}
    n = len(states)
    system = sympy.zeros(n, n)
    for u, row in rows.items():
        for letter, p in row.items():
            system[index[(u + letter)[1:]], index[u]] += p
    system -= sympy.eye(n)
    system[0, :] = sympy.ones(1, n)
    rhs = sympy.zeros(n, 1)
    rhs[0, 0] = 1
    solution = system.LUsolve(rhs)
    return {u: sympy.nsimplify(solution[index[u]]) for u in states}


def markov_measure(shift: SFTShift, spec: MarkovMeasureModel) -> MarkovMeasure:
    """Markov measure from user transition data, stationary vector supplied or solved.

    Raises:
        ReducibleShiftError: If the SFT is reducible
        MeasureError: On non-stochastic rows, support mismatch or a non-stationary π
    """
    _require_irreducible(shift)
    shift = _present_with_step(shift, spec.step)
    states = shift.blocks()
    tol = settings.TOLERANCE

    unknown = sorted(set(spec.transitions) - set(states))
    if unknown:
        raise MeasureError(f"transition rows for blocks outside the recurrent support: {unknown}")
    transitions: dict[str, dict[str, float]] = {}
    exact_rows: dict[str, dict[str, sympy.Rational]] | None = {}
    for u in states:
        row = spec.transitions.get(u)
        if row is None:
            raise MeasureError(f"no transition row for block {u!r}")
        extensions = {v[-1] for v in shift.successors(u)}
        if set(row) != extensions:
            raise MeasureError(f"row {u!r} must cover exactly the allowed extensions {sorted(extensions)}")
        parsed = {letter: parse_probability(p) for letter, p in sorted(row.items())}
        if any(p <= 0 for p, _ in parsed.values()):
            raise MeasureError(f"row {u!r} has non-positive probabilities; the measure must be fully supported")
        total = sum(p for p, _ in parsed.values())
        if abs(total - 1.0) > tol:
            raise MeasureError(f"row {u!r} sums to {total}, not 1")
        transitions[u] = {letter: p for letter, (p, _) in parsed.items()}
        if exact_rows is not None and sum(q for _, q in parsed.values()) == 1:
            exact_rows[u] = {letter: q for letter, (_, q) in parsed.items()}
        else:
            exact_rows = None

    measure = MarkovMeasure(shift, dict.fromkeys(states, 0.0), transitions)
    if spec.pi is not None:
        parsed_pi = {u: parse_probability(spec.pi.get(u, 0)) for u in states}
        if sorted(spec.pi) != sorted(states):
            raise MeasureError("stationary vector must be given on exactly the recurrent blocks")
        pi = {u: p for u, (p, _) in parsed_pi.items()}
        exact_pi = {u: q for u, (_, q) in parsed_pi.items()}
        flow = np.array([pi[u] for u in states]) @ measure.block_matrix()
        if np.max(np.abs(flow - np.array([pi[u] for u in states]))) > tol or abs(sum(pi.values()) - 1) > tol:
            raise MeasureError("supplied π is not a stationary probability vector")
        if exact_rows is None or sum(exact_pi.values()) != 1:
            exact_pi = None
    elif exact_rows is not None:
        exact_pi = _stationary_exact(states, exact_rows)
        pi = {u: float(q) for u, q in exact_pi.items()}
    else:
        exact_pi = None
        result = perron_vector(measure.block_matrix(), left=True)
        pi = dict(zip(states, result.vector.tolist(), strict=True))

    logger.debug(f"Markov measure on {shift.describe()}: rational={exact_pi is not None}")
    return MarkovMeasure(shift, pi, transitions, exact_pi, exact_rows if exact_pi is not None else None)


def parry_measure(shift: SFTShift) -> MarkovMeasure:
    """Maximal-entropy Markov measure from the Perron vectors of the r-block adjacency matrix.

    Raises:
        ReducibleShiftError: If the SFT is reducible
    """
    _require_irreducible(shift)
    states = shift.blocks()
    index = {u: i for i, u in enumerate(states)}
    adjacency = np.zeros((len(states), len(states)))
    for u in states:
        for v in shift.successors(u):
            adjacency[index[u], index[v]] = 1.0
    right = perron_vector(adjacency)
    left = perron_vector(adjacency, left=True)
    lam = right.eigenvalue
    weights = left.vector * right.vector
    weights /= weights.sum()
    pi = {u: float(weights[index[u]]) for u in states}
    transitions = {
        u: {v[-1]: float(right.vector[index[v]] / (lam * right.vector[index[u]])) for v in shift.successors(u)}
        for u in states
    }
    logger.debug(f"Parry measure on {shift.describe()}: λ={lam:.12g}")
    return MarkovMeasure(shift, pi, transitions, backend="parry")
