"""The unique invariant measure of a primitive substitution shift."""

import threading

import numpy as np
from loguru import logger

from group_density.core.exceptions import MeasureError
from group_density.measures.base import CylinderMeasure
from group_density.measures.perron import perron_vector
from group_density.shifts.spaces import SubstitutionShift


class SubstitutionMeasure(CylinderMeasure):
    """Cylinder frequencies from the Perron vectors of the induced n-block substitutions."""

    backend = "substitution-perron"

    def __init__(self, shift: SubstitutionShift):
        self.shift = shift
        self._cache: dict[int, dict[str, float]] = {0: {"": 1.0}}
        self._lock = threading.Lock()

    def block_matrix(self, n: int) -> tuple[tuple[str, ...], np.ndarray]:
        """Incidence matrix of σ_n: block w maps to the n-windows of σ(w) starting in σ(w₀)."""
        blocks = self.shift.language(n)
        index = {w: i for i, w in enumerate(blocks)}
        matrix = np.zeros((len(blocks), len(blocks)))
        for w in blocks:
            image = self.shift.apply(w)
            for i in range(len(self.shift.rules[w[0]])):
                matrix[index[w], index[image[i : i + n]]] += 1.0
        return blocks, matrix

    def _compute(self, n: int) -> dict[str, float]:
        blocks, matrix = self.block_matrix(n)
        try:
            result = perron_vector(matrix, left=True)
        except MeasureError as e:
            raise MeasureError(f"induced {n}-block substitution is not primitive") from e
        logger.debug(f"{self.shift.describe()}: block frequencies at length {n} ({len(blocks)} blocks)")
        return dict(zip(blocks, result.vector.tolist(), strict=True))

    def distribution(self, n: int) -> dict[str, float]:
        with self._lock:
            cached = self._cache.get(n)
            longer = min((m for m in self._cache if m > n), default=None)
            source = dict(self._cache[longer]) if cached is None and longer is not None else None
        if cached is not None:
            return cached
        if source is not None:
            marginal: dict[str, float] = {}
            for w, mu in source.items():
                marginal[w[:n]] = marginal.get(w[:n], 0.0) + mu
            computed = marginal
        else:
            computed = self._compute(n)
        with self._lock:
            return self._cache.setdefault(n, computed)

    def value(self, word: str) -> float:
        return self.distribution(len(word)).get(word, 0.0)


def substitution_measure(shift: SubstitutionShift) -> SubstitutionMeasure:
    return SubstitutionMeasure(shift)
