"""Service for serializing reports: sorted-key JSON, CSV series and cobounding-map round trips."""

import csv
import io
import json
from typing import Any

from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import Subgroup, right_cosets
from group_density.cobounding.maps import CoboundingMap, CosetMasses
from group_density.core.exceptions import GroupError, ProblemDetails
from group_density.schemas.report import CoboundingMapModel, Report

JSON = "json"
CSV = "csv"
FORMATS = (JSON, CSV)

# Results whose value is a list of uniform rows render as a table in CSV.
TABULAR_RESULTS = ("sequence", "probe")


def cobounding_model(alpha: CoboundingMap, masses: CosetMasses | None = None) -> CoboundingMapModel:
    partition = alpha.partition
    model = CoboundingMapModel(
        subgroup=alpha.subgroup.labels(),
        length=alpha.length,
        assignment={w: partition.representative_label(c) for w, c in sorted(alpha.assignment.items())},
    )
    if masses is not None:
        model.masses = {partition.representative_label(c): v for c, v in sorted(masses.values.items())}
        if masses.exact is not None:
            model.exact_masses = {partition.representative_label(c): str(v) for c, v in sorted(masses.exact.items())}
    return model


def cobounding_from_model(model: CoboundingMapModel, phi: GroupMorphism) -> CoboundingMap:
    """Rebuild a cobounding map from its serialization.

    Raises:
        GroupError: If the subgroup or a coset representative does not resolve in φ's group
    """
    group = phi.group
    subgroup = Subgroup.from_members(group, (group.element(label) for label in model.subgroup))
    partition = right_cosets(group, subgroup)
    try:
        assignment = {w: partition.coset_by_label(label) for w, label in model.assignment.items()}
    except GroupError as e:
        raise GroupError(f"cobounding map has an unresolvable coset: {e}") from e
    return CoboundingMap(partition, model.length, assignment)


class ReportService:
    """Renders reports and problem details for the CLI."""

    def __init__(self, fmt: str = JSON):
        if fmt not in FORMATS:
            raise ValueError(f"unknown output format {fmt!r}")
        self.fmt = fmt

    def render(self, report: Report) -> str:
        if self.fmt == CSV:
            return self.to_csv(report)
        return self.to_json(report)

    @staticmethod
    def to_json(report: Report | ProblemDetails) -> str:
        return json.dumps(report.model_dump(mode="json"), sort_keys=True, indent=2, ensure_ascii=False)

    def to_csv(self, report: Report) -> str:
        """Row table for series results; flattened key/value pairs otherwise."""
        for key in TABULAR_RESULTS:
            rows = report.results.get(key)
            if isinstance(rows, dict):
                rows = rows.get("rows")
            if rows:
                return self.table(rows)
        flat = sorted(self.flatten(report.model_dump(mode="json")).items())
        return self.table([{"key": k, "value": v} for k, v in flat])

    @staticmethod
    def table(rows: list[dict[str, Any]]) -> str:
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=list(rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    @classmethod
    def flatten(cls, value: Any, prefix: str = "") -> dict[str, Any]:
        """Dotted paths to scalar leaves."""
        if isinstance(value, dict):
            out: dict[str, Any] = {}
            for k, v in value.items():
                out.update(cls.flatten(v, f"{prefix}.{k}" if prefix else str(k)))
            return out
        if isinstance(value, list):
            out = {}
            for i, v in enumerate(value):
                out.update(cls.flatten(v, f"{prefix}.{i}" if prefix else str(i)))
            return out
        return {prefix: value}
