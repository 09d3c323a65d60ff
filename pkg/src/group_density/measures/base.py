"""The cylinder-measure interface shared by all backends."""

from abc import ABC, abstractmethod
from collections.abc import Iterable

import sympy

from group_density.shifts.spaces import ShiftSpace


class CylinderMeasure(ABC):
    """Shift-invariant probability measure queried on cylinders [w]."""

    backend: str
    shift: ShiftSpace

    @property
    def is_rational(self) -> bool:
        return False

    @abstractmethod
    def value(self, word: str) -> float:
        """μ(w); zero outside L(X)."""

    def rational_value(self, word: str) -> sympy.Rational | None:
        """Exact μ(w) for rational backends, None otherwise."""
        return None

    def distribution(self, n: int) -> dict[str, float]:
        return {w: self.value(w) for w in self.shift.language(n)}

    def mass(self, words: Iterable[str]) -> float:
        return sum(self.value(w) for w in words)

    def rational_mass(self, words: Iterable[str]) -> sympy.Rational | None:
        if not self.is_rational:
            return None
        return sum((self.rational_value(w) for w in words), sympy.Integer(0))

    def consistency_residual(self, depth: int) -> float:
        """Largest violation of Σ_a μ(wa) = μ(w) and Σ_a μ(aw) = μ(w) over |w| ≤ depth."""
        worst = abs(self.value("") - 1.0)
        for n in range(depth + 1):
            longer = self.distribution(n + 1)
            right: dict[str, float] = {}
            left: dict[str, float] = {}
            for w, mu in longer.items():
                right[w[:-1]] = right.get(w[:-1], 0.0) + mu
                left[w[1:]] = left.get(w[1:], 0.0) + mu
            for w, mu in self.distribution(n).items():
                worst = max(worst, abs(right.get(w, 0.0) - mu), abs(left.get(w, 0.0) - mu))
        return worst
