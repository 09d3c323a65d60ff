"""Cylinder measures: Markov/Parry on SFTs, unique measures of substitution and periodic shifts."""

from group_density.core.exceptions import MeasureError
from group_density.measures.base import CylinderMeasure
from group_density.measures.markov import MarkovMeasure, markov_measure, parry_measure
from group_density.measures.perron import PerronResult, perron_vector
from group_density.measures.periodic import PeriodicMeasure, periodic_measure
from group_density.measures.substitution import SubstitutionMeasure, substitution_measure
from group_density.schemas.shift import MarkovMeasureModel, MeasureSpecModel, ParryMeasureSpec, UniqueMeasureSpec
from group_density.shifts.spaces import PeriodicShift, SFTShift, ShiftSpace, SubstitutionShift


def build_measure(shift: ShiftSpace, spec: MeasureSpecModel | None = None) -> CylinderMeasure:
    """Measure for a shift; defaults to Parry on SFTs and the unique measure otherwise.

    Raises:
        MeasureError: If the measure kind does not fit the shift kind
    """
    if spec is None:
        spec = ParryMeasureSpec(type="parry") if isinstance(shift, SFTShift) else UniqueMeasureSpec(type="unique")
    if isinstance(shift, SFTShift):
        if isinstance(spec, ParryMeasureSpec):
            return parry_measure(shift)
        if isinstance(spec, MarkovMeasureModel):
            return markov_measure(shift, spec)
        raise MeasureError("SFTs carry Parry or Markov measures, not 'unique'")
    if not isinstance(spec, UniqueMeasureSpec):
        raise MeasureError(f"{shift.kind} shifts carry only their unique invariant measure")
    if isinstance(shift, SubstitutionShift):
        return substitution_measure(shift)
    if isinstance(shift, PeriodicShift):
        return periodic_measure(shift)
    raise MeasureError(f"no measure backend for {shift.kind} shifts")


__all__ = [
    "CylinderMeasure",
    "MarkovMeasure",
    "SubstitutionMeasure",
    "PeriodicMeasure",
    "PerronResult",
    "build_measure",
    "markov_measure",
    "parry_measure",
    "perron_vector",
    "periodic_measure",
    "substitution_measure",
]
