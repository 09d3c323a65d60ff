"""Exact densities: |K|/|G| on φ-irreducible SFTs, the cobounding formula on minimal bases."""

from dataclasses import dataclass, field

import sympy
from loguru import logger

from group_density.cobounding.decomposition import MinimalDecomposition, minimal_decomposition
from group_density.core.exceptions import PreconditionError, ReducibleShiftError, SemiDecisionError
from group_density.density.slices import DensityQuery
from group_density.shifts.spaces import SFTShift
from group_density.skew.irreducibility import phi_irreducible

ERGODIC_FORMULA = "ergodic-formula"
COBOUNDING_FORMULA = "cobounding-formula"
CONDITIONAL_COBOUNDING_FORMULA = "conditional-cobounding-formula"
UNAVAILABLE = "unavailable"


@dataclass(frozen=True)
class ExactDensity:
    value: float | None
    rational: sympy.Rational | None
    route: str
    reason: str = ""
    certificates: list[str] = field(default_factory=list)
    decomposition: MinimalDecomposition | None = field(default=None, repr=False)

    @property
    def available(self) -> bool:
        return self.route != UNAVAILABLE


def formula_density(decomposition: MinimalDecomposition, target: frozenset[int]) -> tuple[float, sympy.Rational | None]:
    """(1/|H|)·Σ_{k∈K} Σ_{Hg} μ(α⁻¹(Hg))·μ(α⁻¹(Hgk)) for the first minimal cobounding map."""
    alpha, masses = decomposition.maps[0], decomposition.masses[0]
    partition = alpha.partition
    order = alpha.subgroup.order
    value = 0.0
    exact = sympy.Integer(0) if masses.exact is not None else None
    for k in sorted(target):
        for c in range(partition.count):
            d = partition.act(c, k)
            value += masses.values[c] * masses.values[d]
            if exact is not None:
                exact += masses.exact[c] * masses.exact[d]
    return value / order, (exact / order if exact is not None else None)


def exact_density(query: DensityQuery, max_length: int | None = None) -> ExactDensity:
    """Route the query to the SFT formula or the cobounding formula; never raises on undecided input."""
    shift, phi = query.shift, query.morphism
    group = phi.group
    if isinstance(shift, SFTShift):
        try:
            irreducible = phi_irreducible(shift, phi)
        except ReducibleShiftError as e:
            return ExactDensity(None, None, UNAVAILABLE, str(e))
        if not irreducible:
            return ExactDensity(None, None, UNAVAILABLE, "the SFT is not φ-irreducible")
        rational = sympy.Rational(len(query.target), group.order)
        return ExactDensity(float(rational), rational, ERGODIC_FORMULA, "φ-irreducible SFT")

    try:
        decomposition = minimal_decomposition(shift, phi, query.measure, max_length)
    except (SemiDecisionError, PreconditionError) as e:
        logger.warning(f"exact density unavailable: {e}")
        return ExactDensity(None, None, UNAVAILABLE, str(e))

    value, rational = formula_density(decomposition, query.target)
    if decomposition.subgroup.index == 1:
        rational = sympy.Rational(len(query.target), group.order)
    if rational is not None:
        value = float(rational)
    if not decomposition.certified:
        route, reason = CONDITIONAL_COBOUNDING_FORMULA, "ergodicity certificate absent"
    elif decomposition.subgroup.index == 1:
        route, reason = ERGODIC_FORMULA, "the skew product is minimal"
    else:
        route, reason = COBOUNDING_FORMULA, f"{decomposition.count} minimal subsets"
    return ExactDensity(value, rational, route, reason, list(decomposition.certificates), decomposition)
