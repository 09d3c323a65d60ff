"""Pydantic schemas for problem specs and reports."""

from group_density.schemas.group import (
    CyclicGroupSpec,
    GroupSpec,
    MatrixGroupSpec,
    PermutationGroupSpec,
    ProductGroupSpec,
    SymmetricGroupSpec,
    TableGroupSpec,
)
from group_density.schemas.problem import ProblemSpec, QuerySpec
from group_density.schemas.report import (
    BifixReport,
    CesaroModel,
    CoboundingMapModel,
    DecompositionModel,
    DensityReport,
    IrreducibilityReport,
    MinimalityReport,
    Report,
    ReturnSubgroupStepModel,
    WarningEntry,
)
from group_density.schemas.shift import (
    MarkovMeasureModel,
    MeasureSpecModel,
    ParryMeasureSpec,
    PeriodicSpec,
    SFTSpec,
    ShiftSpecModel,
    SubstitutionSpec,
    UniqueMeasureSpec,
)

__all__ = [
    # Groups
    "GroupSpec",
    "CyclicGroupSpec",
    "SymmetricGroupSpec",
    "PermutationGroupSpec",
    "TableGroupSpec",
    "MatrixGroupSpec",
    "ProductGroupSpec",
    # Shifts and measures
    "ShiftSpecModel",
    "SFTSpec",
    "SubstitutionSpec",
    "PeriodicSpec",
    "MeasureSpecModel",
    "ParryMeasureSpec",
    "MarkovMeasureModel",
    "UniqueMeasureSpec",
    # Problems
    "ProblemSpec",
    "QuerySpec",
    # Reports
    "Report",
    "WarningEntry",
    "DensityReport",
    "CesaroModel",
    "MinimalityReport",
    "ReturnSubgroupStepModel",
    "CoboundingMapModel",
    "DecompositionModel",
    "BifixReport",
    "IrreducibilityReport",
]
