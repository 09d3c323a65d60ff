"""Service turning a validated ProblemSpec into domain objects and running CLI commands."""

from collections.abc import Callable
from dataclasses import dataclass

from loguru import logger

from group_density.algebra.groups import FiniteGroup, build_group
from group_density.algebra.morphisms import GroupMorphism
from group_density.algebra.subgroups import Subgroup, trivial_subgroup
from group_density.bifix import (
    average_length,
    bifix_code,
    degree_surjectivity_check,
    maximal_degree_containment,
    x_degree,
)
from group_density.cobounding import minimal_decomposition
from group_density.cobounding.decomposition import RETURN_SUBGROUP
from group_density.core.config import settings
from group_density.core.exceptions import (
    GroupError,
    PreconditionError,
    ReducibleShiftError,
    SemiDecisionError,
    ShiftError,
    SpecSchemaError,
)
from group_density.density import (
    CONDITIONAL_COBOUNDING_FORMULA,
    UNAVAILABLE,
    DensityQuery,
    ExactDensity,
    cesaro_density,
    continued_fraction_demo,
    exact_density,
    fibonacci_probe,
    slice_series,
)
from group_density.measures import CylinderMeasure, build_measure
from group_density.schemas.problem import ProblemSpec
from group_density.schemas.report import (
    BifixReport,
    CesaroModel,
    DecompositionModel,
    DensityReport,
    IrreducibilityReport,
    MinimalityReport,
    Report,
    ReturnSubgroupStepModel,
    WarningEntry,
)
from group_density.services.report_service import cobounding_model
from group_density.shifts.spaces import PeriodicShift, SFTShift, ShiftSpace, SubstitutionShift, build_shift
from group_density.skew import fiber_ergodic, phi_irreducible, skew_minimal, skew_transitive, strongly_irreducible
from group_density.skew.minimality import welldoc_witness
from group_density.subst_tools import (
    free_group_invertible,
    invertibility_order,
    return_basis_check,
    skew_components_report,
)

COMMANDS = (
    "density",
    "minimality",
    "cobounding",
    "bifix",
    "irreducibility",
    "sequence",
    "probe-fibonacci",
    "demo-contfrac",
    "report",
)
SPECLESS_COMMANDS = ("probe-fibonacci", "demo-contfrac")

DEFAULT_PROBE_TERMS = 4
DEFAULT_CONTFRAC_TERMS = 10_000


@dataclass(frozen=True, eq=False)
class Problem:
    """A ProblemSpec with every cross-reference resolved."""

    spec: ProblemSpec
    group: FiniteGroup
    morphism: GroupMorphism
    shift: ShiftSpace
    measure: CylinderMeasure

    def elements(self, labels) -> list[int]:
        return [self.group.element(label) for label in labels]

    def query(self, target_labels) -> DensityQuery:
        return DensityQuery.build(self.shift, self.measure, self.morphism, target_labels)


def build_problem(spec: ProblemSpec) -> Problem:
    """Construct group, morphism, shift and measure.

    Raises:
        GroupError: If a label does not resolve or a declared-onto morphism is not onto
        ShiftError: If the shift is malformed or its alphabet differs from the spec's
        MeasureError: If the measure does not fit the shift
    """
    group = build_group(spec.group)
    phi = GroupMorphism.from_mapping(group, spec.morphism, spec.alphabet)
    if spec.onto and not phi.is_onto():
        raise GroupError(
            f"morphism is declared onto but its image has order {phi.image_subgroup().order} < {group.order}"
        )
    shift = build_shift_for(spec)
    measure = build_measure(shift, spec.measure)
    logger.info(f"Built problem {spec.name or shift.describe()}: {group.name}, {shift.kind} shift")
    return Problem(spec, group, phi, shift, measure)


def build_shift_for(spec: ProblemSpec) -> ShiftSpace:
    shift = build_shift(spec.shift, spec.alphabet, spec.name)
    if set(shift.alphabet) != set(spec.alphabet):
        raise ShiftError(f"shift alphabet {sorted(shift.alphabet)} differs from the spec alphabet {spec.alphabet}")
    return shift


class ProblemService:
    """Runs one command on one problem, collecting results, certificates and warnings."""

    def __init__(
        self,
        spec: ProblemSpec | None = None,
        horizon: int | None = None,
        max_cylinder: int | None = None,
        cap: int | None = None,
    ):
        self.spec = spec
        query = spec.query if spec is not None else None
        self.horizon = horizon or (query.horizon if query else None) or settings.CESARO_HORIZON
        self.max_cylinder = max_cylinder if max_cylinder is not None else (query.max_cylinder if query else None)
        self.cap = cap or (query.cap if query else None)
        self._problem: Problem | None = None

    @property
    def problem(self) -> Problem:
        if self._problem is None:
            if self.spec is None:
                raise SpecSchemaError("this command needs a problem spec (a path, '-' or --fixture NAME)")
            self._problem = build_problem(self.spec)
        return self._problem

    def run(self, command: str) -> Report:
        """Run ``command``; semi-decision exhaustion becomes a warning, never an error.

        Raises:
            SpecSchemaError: If the command is unknown or needs a spec that was not given
            SemanticError: If the spec is mathematically invalid for the command
            InvariantBreachError: If an internal check fails
        """
        if command not in COMMANDS:
            raise SpecSchemaError(f"unknown command {command!r}; expected one of {', '.join(COMMANDS)}")
        if command not in SPECLESS_COMMANDS:
            _ = self.problem
        report = Report(command=command, spec=self.spec.name if self.spec else None, inputs=self._inputs())
        handler: Callable[[Report], None] = getattr(self, "_" + command.replace("-", "_"))
        try:
            handler(report)
        except SemiDecisionError as e:
            logger.warning(f"{command}: {e}")
            self._warn(report, "semi-decision", str(e))
        return report

    # Helpers

    def _inputs(self) -> dict:
        inputs = {"horizon": self.horizon, "max_cylinder": self.max_cylinder, "cap": self.cap}
        if self.spec is not None:
            inputs["spec"] = self.spec.model_dump(mode="json", exclude_none=True)
        return inputs

    @staticmethod
    def _warn(report: Report, kind: str, message: str):
        entry = WarningEntry(kind=kind, message=message)
        if entry not in report.warnings:
            report.warnings.append(entry)

    @staticmethod
    def _certify(report: Report, certificates: list[str]):
        for certificate in certificates:
            if certificate not in report.certificates:
                report.certificates.append(certificate)

    def _section(self, report: Report, name: str, handler: Callable[[Report], None]):
        """Run one part of the full report; inapplicable parts are skipped with a note."""
        try:
            handler(report)
        except SemiDecisionError as e:
            self._warn(report, "semi-decision", f"{name}: {e}")
        except (PreconditionError, ReducibleShiftError) as e:
            self._warn(report, "skipped", f"{name}: {e}")

    def _target_labels(self) -> list:
        query = self.problem.spec.query
        if query.K:
            return list(query.K)
        return [self.problem.group.label(self.problem.group.identity)]

    def _subgroup(self) -> Subgroup:
        problem = self.problem
        labels = problem.spec.query.H
        if not labels:
            return trivial_subgroup(problem.group)
        return Subgroup.from_members(problem.group, problem.elements(labels))

    def _density_report(self, report: Report, query: DensityQuery) -> DensityReport:
        group = query.morphism.group
        exact = exact_density(query, self.max_cylinder)
        cesaro = cesaro_density(query, self.horizon)
        self._density_warnings(report, exact)
        self._certify(report, [exact.route, *exact.certificates])
        return DensityReport(
            K=[group.label(g) for g in sorted(query.target)],
            route=exact.route,
            reason=exact.reason,
            exact=str(exact.rational) if exact.rational is not None else None,
            value=exact.value,
            certificates=exact.certificates,
            cesaro=CesaroModel(
                route="cesaro-transported" if cesaro.transported else "cesaro",
                horizon=cesaro.horizon,
                value=cesaro.value,
                exact=str(cesaro.exact) if cesaro.exact is not None else None,
                oscillation_min=cesaro.oscillation_min,
                oscillation_max=cesaro.oscillation_max,
                transported_slices=cesaro.transported,
            ),
        )

    def _density_warnings(self, report: Report, exact: ExactDensity):
        if exact.route == CONDITIONAL_COBOUNDING_FORMULA:
            self._warn(report, "conditional", "ergodicity certificate absent; the formula value is conditional")
        elif exact.route == UNAVAILABLE:
            self._warn(report, "unavailable", f"exact density unavailable: {exact.reason}")

    # Commands

    def _density(self, report: Report):
        query = self.problem.query(self._target_labels())
        report.results["density"] = self._density_report(report, query).model_dump(mode="json")

    def _minimality(self, report: Report):
        problem = self.problem
        group = problem.group
        evidence = skew_minimal(problem.shift, problem.morphism)
        model = MinimalityReport(
            minimal=evidence.minimal,
            complete=evidence.complete,
            subgroup=evidence.subgroup.labels(),
            subgroup_order=evidence.subgroup.order,
            stable_length=evidence.stable_length,
            steps=[
                ReturnSubgroupStepModel(
                    length=step.length,
                    u=step.u,
                    returns=step.returns,
                    subgroup_order=len(step.subgroup),
                    certified=step.certified,
                )
                for step in evidence.steps
            ],
        )
        if not evidence.complete:
            self._warn(report, "semi-decision", "return subgroups did not stabilize; minimality is uncertified")
        self._certify(report, [model.route])
        report.results["minimality"] = model.model_dump(mode="json")

        query = problem.spec.query
        if query.n and query.scan:
            witness = welldoc_witness(problem.shift, problem.morphism, query.n, query.scan)
            report.results["welldoc"] = {
                "n": query.n,
                "scan": query.scan,
                "prefix": witness.prefix,
                "occurrences": witness.occurrences,
                "elements": [group.label(g) for g in sorted(witness.elements)],
                "proper": len(witness.elements) < group.order,
            }

    def _cobounding(self, report: Report):
        problem = self.problem
        decomposition = minimal_decomposition(problem.shift, problem.morphism, problem.measure, self.max_cylinder)
        minimality = decomposition.minimality
        model = DecompositionModel(
            subgroup=decomposition.subgroup.labels(),
            subgroup_order=decomposition.subgroup.order,
            index=decomposition.subgroup.index,
            count=decomposition.count,
            cylinder_length=decomposition.cylinder_length,
            certificates=decomposition.certificates,
            return_prefix=minimality.u,
            return_subgroup=minimality.return_subgroup.labels(),
            maps=[
                cobounding_model(alpha, masses)
                for alpha, masses in zip(decomposition.maps, decomposition.masses, strict=True)
            ],
        )
        if not decomposition.certified:
            self._warn(report, "conditional", "no ergodicity certificate for the minimal subsets")
        self._certify(report, [model.route, RETURN_SUBGROUP, *decomposition.certificates])
        report.results["cobounding"] = model.model_dump(mode="json")

    def _bifix(self, report: Report):
        problem = self.problem
        subgroup = self._subgroup()
        code = bifix_code(problem.shift, problem.morphism, subgroup, self.cap)
        degree = x_degree(problem.shift, code)
        avg = average_length(code, problem.measure)
        containment = maximal_degree_containment(code, degree.degree)
        surjectivity = None
        if subgroup.order == 1:
            check = degree_surjectivity_check(problem.shift, problem.morphism, problem.measure)
            surjectivity = {
                "applicable": check.applicable,
                "reason": check.reason,
                "group_order": check.group_order,
                "degree": check.degree,
                "average_length": check.average_length,
                "holds": check.holds,
            }
            for note in check.notes:
                self._warn(report, "note", note)
        if degree.certified_length is None:
            self._warn(report, "semi-decision", "X-degree not certified within the length cap")
        model = BifixReport(
            subgroup=subgroup.labels(),
            index=subgroup.index,
            code=list(code.words),
            prefix_complete_length=code.prefix_complete_length,
            suffix_complete_length=code.suffix_complete_length,
            x_degree=degree.degree,
            degree_witness=degree.witness,
            degree_certified_length=degree.certified_length,
            average_length=avg.by_code,
            average_length_by_prefixes=avg.by_prefixes,
            containment_holds=containment.holds,
            containment_violations=[list(pair) for pair in containment.violations],
            parse_tree=code.parse_tree(),
            surjectivity=surjectivity,
        )
        self._certify(report, ["group-code"])
        report.results["bifix"] = model.model_dump(mode="json")

    def _irreducibility(self, report: Report):
        problem = self.problem
        shift, phi = problem.shift, problem.morphism
        si = strongly_irreducible(shift)
        model = IrreducibilityReport(
            phi_irreducible=phi_irreducible(shift, phi),
            skew_transitive=skew_transitive(shift, phi),
            strongly_irreducible=si.strongly_irreducible,
            fiber_ergodic=fiber_ergodic(shift, phi),
            si_classes=[list(cls) for cls in si.relation.classes],
        )
        self._certify(report, [model.route])
        report.results["irreducibility"] = model.model_dump(mode="json")

    def _sequence(self, report: Report):
        query = self.problem.query(self._target_labels())
        series = slice_series(query, self.horizon)
        rows = []
        for i, (value, method) in enumerate(zip(series.values.tolist(), series.methods, strict=True)):
            row = {"n": i, "slice": value, "method": method}
            if series.exact is not None:
                row["exact"] = str(series.exact[i])
            rows.append(row)
        if "transported" in series.methods:
            self._warn(report, "note", "slices past the exact cutoff are transported along a fixed-point prefix")
        self._certify(report, sorted(set(series.methods)))
        report.results["sequence"] = rows

    def _probe_fibonacci(self, report: Report):
        terms = (self.spec.query.terms if self.spec else None) or DEFAULT_PROBE_TERMS
        probe = fibonacci_probe(terms)
        report.results["probe"] = {
            "rows": [
                {"m": row.index, "length": row.length, "slice": row.value, "majority_even": row.majority_even}
                for row in probe.rows
            ],
            "oscillation": probe.oscillation,
        }
        self._warn(
            report,
            "note",
            "slices at length F(m) follow the parity of F(m-1): near 1 when it is even, near 0 when it is odd",
        )
        self._certify(report, ["slice-recursion"])

    def _demo_contfrac(self, report: Report):
        terms = (self.spec.query.terms if self.spec else None) or DEFAULT_CONTFRAC_TERMS
        demo = continued_fraction_demo(terms)

        def exact(result: ExactDensity) -> dict:
            self._density_warnings(report, result)
            self._certify(report, [result.route, *result.certificates])
            return {
                "route": result.route,
                "exact": str(result.rational) if result.rational is not None else None,
                "value": result.value,
            }

        report.results["contfrac"] = {
            "terms": demo.terms,
            "exact_zero": exact(demo.exact_zero),
            "exact_one": exact(demo.exact_one),
            "empirical_zero": demo.empirical_zero,
            "empirical_one": 1 - demo.empirical_zero,
        }

    def _substitution(self, report: Report):
        problem = self.problem
        shift, phi = problem.shift, problem.morphism
        invertibility = invertibility_order(shift, phi, self.cap)
        free = free_group_invertible(shift)
        section = {
            "invertibility": {
                "order": invertibility.order,
                "cap": invertibility.cap,
                "definitive": invertibility.definitive,
            },
            "free_group": {"invertible": free.invertible, "determinant": free.determinant, "reason": free.reason},
        }
        if not invertibility.definitive:
            self._warn(report, "semi-decision", f"no φ∘σⁿ = φ with n ≤ {invertibility.cap}; the cap was reached")
        if invertibility.invertible:
            components = skew_components_report(shift, phi, self.cap)
            section["skew_components"] = {
                "power": components.power,
                "count": components.count,
                "primitive": components.primitive,
                "components": components.components,
            }
        word = problem.spec.query.word
        if word:
            basis = return_basis_check(shift, word, self.cap)
            section["return_basis"] = {
                "word": basis.word,
                "returns": list(basis.returns),
                "rank": basis.rank,
                "basis": basis.basis,
                "complete": basis.complete,
            }
            if not basis.complete:
                self._warn(report, "semi-decision", f"return words of {word!r} are not certified")
        report.results["substitution"] = section

    def _report(self, report: Report):
        shift = self.problem.shift
        self._section(report, "density", self._density)
        if isinstance(shift, SFTShift | PeriodicShift):
            self._section(report, "irreducibility", self._irreducibility)
        if isinstance(shift, SubstitutionShift | PeriodicShift):
            self._section(report, "minimality", self._minimality)
            self._section(report, "cobounding", self._cobounding)
            self._section(report, "bifix", self._bifix)
        if isinstance(shift, SubstitutionShift):
            self._section(report, "substitution", self._substitution)
