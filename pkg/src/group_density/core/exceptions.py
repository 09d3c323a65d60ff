from pydantic import BaseModel, Field, ValidationError

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_SEMANTIC = 3
EXIT_INTERNAL = 4


class ProblemDetails(BaseModel):
    type: str = "about:blank"
    title: str
    status: int
    detail: str | None = None
    instance: str | None = None
    errors: list[str] = Field(default_factory=list)


class GroupDensityError(Exception):
    """Base class for every error raised by the library."""

    exit_code = EXIT_INTERNAL
    title = "Internal Error"


class SpecSchemaError(GroupDensityError):
    """Raised when a problem spec violates the JSON grammar."""

    exit_code = EXIT_SCHEMA
    title = "Schema Violation"

    def __init__(self, message: str, pointers: list[str] | None = None):
        super().__init__(message)
        self.pointers = pointers or []


class FixtureNotFoundError(SpecSchemaError):
    """Raised when a named fixture has no JSON file in the fixture directory."""

    title = "Fixture Not Found"


class SemanticError(GroupDensityError):
    """Raised when well-formed input is mathematically invalid."""

    exit_code = EXIT_SEMANTIC
    title = "Semantic Violation"


class GroupError(SemanticError):
    """Raised for non-associative tables, repeated permutation points or order overflow."""

    pass


class UnknownLetterError(SemanticError):
    """Raised when a word uses a letter outside the morphism's alphabet."""

    pass


class IndexUnavailableError(SemanticError):
    """Raised when a point handle cannot provide the requested index range."""

    pass


class ShiftError(SemanticError):
    """Raised for malformed shift specs (bad forbidden words, non-primitive substitutions)."""

    pass


class WordNotInLanguageError(SemanticError):
    """Raised when an operation needs a word of L(X) and gets something else."""

    pass


class ReducibleShiftError(SemanticError):
    """Raised when an SFT procedure requires irreducibility."""

    pass


class MeasureError(SemanticError):
    """Raised for non-stochastic rows, support mismatches and missing stationary vectors."""

    pass


class ConvergenceError(MeasureError):
    """Raised when power iteration exhausts its step budget."""

    pass


class PreconditionError(SemanticError):
    """Raised when an operation's precondition does not hold for its inputs."""

    pass


class SemiDecisionError(GroupDensityError):
    """Raised when a semi-decision procedure stops at its cap without a certified answer."""

    exit_code = EXIT_OK
    title = "Semi-decision Incomplete"


class InvariantBreachError(GroupDensityError):
    """Raised when an internally checked invariant fails; always a bug."""

    exit_code = EXIT_INTERNAL
    title = "Invariant Breach"


def schema_error_from_validation(exc: ValidationError, prefix: str = "") -> SpecSchemaError:
    """Convert a pydantic ValidationError into a SpecSchemaError with JSON-pointer paths."""
    pointers = []
    for error in exc.errors():
        path = "/".join(str(part) for part in error["loc"])
        pointers.append(f"{prefix}/{path}: {error['msg']}")
    return SpecSchemaError(f"{len(pointers)} schema violation(s)", pointers)


def problem_details(exc: Exception, instance: str | None = None) -> ProblemDetails:
    """Map any exception to the ProblemDetails document emitted by the CLI."""
    if isinstance(exc, SpecSchemaError):
        return ProblemDetails(
            type="schema",
            title=exc.title,
            status=exc.exit_code,
            detail=str(exc),
            instance=instance,
            errors=exc.pointers,
        )
    if isinstance(exc, GroupDensityError):
        return ProblemDetails(
            type=type(exc).__name__, title=exc.title, status=exc.exit_code, detail=str(exc), instance=instance
        )
    return ProblemDetails(
        title="Internal Error", status=EXIT_INTERNAL, detail="An unexpected error occurred.", instance=instance
    )
