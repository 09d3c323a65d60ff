"""Service for problem-spec files: parse, locate and list bundled fixtures."""

import json
import sys
from pathlib import Path

from loguru import logger
from pydantic import ValidationError

from group_density.core.config import settings
from group_density.core.exceptions import FixtureNotFoundError, SpecSchemaError, schema_error_from_validation
from group_density.schemas.problem import ProblemSpec

BUNDLED_FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def parse_spec(source: str | Path) -> ProblemSpec:
    """Read and validate a problem spec from a JSON file, or from stdin when ``source`` is "-".

    Raises:
        SpecSchemaError: If the text is not JSON or violates the grammar (JSON-pointer paths attached)
    """
    try:
        if str(source) == "-":
            text = sys.stdin.read()
        else:
            text = Path(source).read_text(encoding="utf-8")
    except OSError as e:
        raise SpecSchemaError(f"cannot read problem spec {source}: {e}") from e
    return parse_spec_text(text)


def parse_spec_text(text: str) -> ProblemSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecSchemaError(f"problem spec is not valid JSON: {e}", [f"/: line {e.lineno} column {e.colno}"]) from e
    try:
        return ProblemSpec.model_validate(data)
    except ValidationError as e:
        raise schema_error_from_validation(e) from e


class FixtureService:
    """Named problem specs stored as JSON files in the fixture directory."""

    def __init__(self, fixture_dir: str | Path | None = None):
        self.fixture_dir = Path(fixture_dir or settings.FIXTURE_DIR or BUNDLED_FIXTURES)

    def fixture_path(self, name: str) -> Path:
        """Path of fixture ``name`` (without .json extension).

        Raises:
            FixtureNotFoundError: If the fixture file doesn't exist
        """
        path = self.fixture_dir / f"{name}.json"
        if not path.exists():
            logger.error(f"Fixture '{name}' not found at {path}")
            raise FixtureNotFoundError(f"Fixture '{name}' not found. Available: {', '.join(self.names())}")
        return path

    def load(self, name: str) -> ProblemSpec:
        spec = parse_spec(self.fixture_path(name))
        logger.info(f"Loaded fixture '{name}' from {self.fixture_dir}")
        if spec.name is None:
            spec.name = name
        return spec

    def names(self) -> list[str]:
        return sorted(path.stem for path in self.fixture_dir.glob("*.json"))

    def list_fixtures(self) -> list[dict]:
        """Metadata of every readable fixture, sorted by name.

        Returns:
            List of dicts with name, description, shift and group types
        """
        fixtures = []
        for name in self.names():
            try:
                spec = parse_spec(self.fixture_dir / f"{name}.json")
            except SpecSchemaError as e:
                logger.warning(f"Failed to read fixture {name}: {e}")
                continue
            fixtures.append(
                {
                    "name": name,
                    "description": spec.description or "",
                    "shift": spec.shift.type,
                    "group": spec.group.type,
                    "alphabet": "".join(spec.alphabet),
                }
            )
        return fixtures
