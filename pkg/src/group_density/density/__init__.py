"""Slice measures, Cesàro estimates and exact densities of group languages."""

from group_density.density.exact import (
    COBOUNDING_FORMULA,
    CONDITIONAL_COBOUNDING_FORMULA,
    ERGODIC_FORMULA,
    UNAVAILABLE,
    ExactDensity,
    exact_density,
    formula_density,
)
from group_density.density.probes import (
    ContinuedFractionDemo,
    FibonacciProbe,
    continued_fraction_demo,
    fibonacci_number,
    fibonacci_probe,
    periodic_family,
    periodic_family_density,
)
from group_density.density.slices import (
    CesaroEstimate,
    DensityQuery,
    SliceSeries,
    brute_force_slice,
    cesaro_density,
    slice_measure,
    slice_series,
)

__all__ = [
    # Queries and slices
    "DensityQuery",
    "SliceSeries",
    "slice_measure",
    "slice_series",
    "brute_force_slice",
    "CesaroEstimate",
    "cesaro_density",
    # Exact routes
    "ExactDensity",
    "exact_density",
    "formula_density",
    "ERGODIC_FORMULA",
    "COBOUNDING_FORMULA",
    "CONDITIONAL_COBOUNDING_FORMULA",
    "UNAVAILABLE",
    # Probes
    "FibonacciProbe",
    "fibonacci_probe",
    "fibonacci_number",
    "ContinuedFractionDemo",
    "continued_fraction_demo",
    "periodic_family",
    "periodic_family_density",
]
