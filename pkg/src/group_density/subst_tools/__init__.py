"""Substitution machinery: invertibility under φ, skew substitutions and free-group folding."""

from group_density.subst_tools.invertibility import InvertibilityResult, invertibility_order
from group_density.subst_tools.skew_substitution import (
    ComponentsReport,
    SkewSubstitution,
    skew_components_report,
    skew_substitution,
)
from group_density.subst_tools.stallings import (
    FreeInvertibility,
    ReturnBasisReport,
    StallingsGraph,
    format_free_word,
    free_group_invertible,
    parse_free_word,
    return_basis_check,
    stallings_subgroup,
)

__all__ = [
    "invertibility_order",
    "InvertibilityResult",
    "skew_substitution",
    "skew_components_report",
    "SkewSubstitution",
    "ComponentsReport",
    "stallings_subgroup",
    "StallingsGraph",
    "parse_free_word",
    "format_free_word",
    "return_basis_check",
    "ReturnBasisReport",
    "free_group_invertible",
    "FreeInvertibility",
]
