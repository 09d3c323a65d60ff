"""Uniform measure on a periodic orbit."""

import sympy

from group_density.measures.base import CylinderMeasure
from group_density.shifts.spaces import PeriodicShift


class PeriodicMeasure(CylinderMeasure):
    """μ(w) = #{0 ≤ i < p : w occurs at i in p^∞} / p."""

    backend = "periodic-counting"

    def __init__(self, shift: PeriodicShift):
        self.shift = shift

    @property
    def is_rational(self) -> bool:
        return True

    def rational_value(self, word: str) -> sympy.Rational:
        p = self.shift.period
        unrolled = self.shift.word * (len(word) // p + 2)
        hits = sum(1 for i in range(p) if unrolled.startswith(word, i))
        return sympy.Rational(hits, p)

    def value(self, word: str) -> float:
        return float(self.rational_value(word))


def periodic_measure(shift: PeriodicShift) -> PeriodicMeasure:
    return PeriodicMeasure(shift)
