"""Pydantic schemas for the reports emitted by the CLI."""

from typing import Any

from pydantic import BaseModel, Field


class WarningEntry(BaseModel):
    """Semi-decision limit, conditional flag or discrepancy note attached to a report."""

    kind: str
    message: str


class CesaroModel(BaseModel):
    """Cesàro average of the slice measures up to a horizon."""

    route: str = "cesaro"
    horizon: int
    value: float
    exact: str | None = None
    oscillation_min: float
    oscillation_max: float
    transported_slices: int = 0


class DensityReport(BaseModel):
    """Exact and empirical density of φ⁻¹(K)."""

    K: list[str]
    route: str
    reason: str = ""
    exact: str | None = None
    value: float | None = None
    certificates: list[str] = Field(default_factory=list)
    cesaro: CesaroModel | None = None


class ReturnSubgroupStepModel(BaseModel):
    length: int
    u: str
    returns: int
    subgroup_order: int
    certified: bool


class MinimalityReport(BaseModel):
    """Return-subgroup sweep deciding minimality of the skew product."""

    route: str = "return-subgroups"
    minimal: bool
    complete: bool
    subgroup: list[str]
    subgroup_order: int
    stable_length: int | None = None
    steps: list[ReturnSubgroupStepModel] = Field(default_factory=list)


class CoboundingMapModel(BaseModel):
    """Cylinder-level cobounding map; values are coset representatives."""

    subgroup: list[str]
    length: int
    assignment: dict[str, str]
    masses: dict[str, float] = Field(default_factory=dict)
    exact_masses: dict[str, str] | None = None


class DecompositionModel(BaseModel):
    """Minimal closed invariant subsets of the skew product."""

    route: str = "cobounding-maps"
    subgroup: list[str]
    subgroup_order: int
    index: int
    count: int
    cylinder_length: int
    certificates: list[str] = Field(default_factory=list)
    return_prefix: str | None = None
    return_subgroup: list[str] = Field(default_factory=list)
    maps: list[CoboundingMapModel] = Field(default_factory=list)


class BifixReport(BaseModel):
    """The X-complete bifix code U, its degrees and average length."""

    subgroup: list[str]
    index: int
    code: list[str]
    prefix_complete_length: int
    suffix_complete_length: int | None = None
    x_degree: int
    degree_witness: str
    degree_certified_length: int | None = None
    average_length: float
    average_length_by_prefixes: float
    containment_holds: bool
    containment_violations: list[list[str]] = Field(default_factory=list)
    parse_tree: str
    surjectivity: dict[str, Any] | None = None


class IrreducibilityReport(BaseModel):
    """φ-irreducibility, strong irreducibility and fiber ergodicity of an SFT."""

    route: str = "pair-graph"
    phi_irreducible: bool
    skew_transitive: bool
    strongly_irreducible: bool
    fiber_ergodic: bool
    si_classes: list[list[str]] = Field(default_factory=list)


class Report(BaseModel):
    """Everything one CLI command produced."""

    command: str
    spec: str | None = None
    inputs: dict[str, Any] = Field(default_factory=dict)
    results: dict[str, Any] = Field(default_factory=dict)
    certificates: list[str] = Field(default_factory=list)
    warnings: list[WarningEntry] = Field(default_factory=list)
