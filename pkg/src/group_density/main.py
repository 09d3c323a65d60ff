"""Command-line entry point: parse a problem spec, run one command, emit its report."""

import argparse
import json
import sys

from loguru import logger

from group_density import __version__
from group_density.core.exceptions import (
    EXIT_INTERNAL,
    EXIT_OK,
    EXIT_SCHEMA,
    GroupDensityError,
    SpecSchemaError,
    problem_details,
)
from group_density.core.logging import setup_logging
from group_density.services.fixture_service import FixtureService, parse_spec
from group_density.services.problem_service import COMMANDS, ProblemService
from group_density.services.report_service import CSV, FORMATS, JSON, ReportService


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="group-density",
        description="Densities of group languages in shift spaces via skew products.",
    )
    parser.add_argument("command", nargs="?", choices=COMMANDS, help="Command to run")
    parser.add_argument("spec", nargs="?", help="Problem spec JSON file, or '-' for stdin")
    parser.add_argument("--fixture", metavar="NAME", help="Use a bundled (or FIXTURE_DIR) problem spec")
    parser.add_argument("--list-fixtures", action="store_true", help="List fixture names and exit")
    parser.add_argument("--horizon", type=int, metavar="N", help="Cesàro horizon and sequence length")
    parser.add_argument("--max-cylinder", type=int, metavar="L", help="Cylinder-length bound of the cobounding sweep")
    parser.add_argument("--cap", type=int, metavar="N", help="Invertibility, return-window and bifix caps")
    parser.add_argument("--format", choices=FORMATS, default=JSON, help="Report format (default: json)")
    parser.add_argument("--log-level", help="Override LOG_LEVEL for this run")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def _log_level(args: argparse.Namespace) -> str | None:
    if args.log_level:
        return args.log_level.upper()
    if args.verbose >= 2:
        return "DEBUG"
    if args.verbose == 1:
        return "INFO"
    return None


def _emit(text: str):
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(_log_level(args))

    fixtures = FixtureService()
    if args.list_fixtures:
        listing = fixtures.list_fixtures()
        if args.format == CSV:
            _emit(ReportService.table(listing) if listing else "")
        else:
            _emit(json.dumps(listing, sort_keys=True, indent=2, ensure_ascii=False))
        return EXIT_OK
    if args.command is None:
        parser.print_usage(sys.stderr)
        return EXIT_SCHEMA

    instance = args.spec or (f"fixture:{args.fixture}" if args.fixture else None)
    try:
        if args.spec and args.fixture:
            raise SpecSchemaError("give either a spec path or --fixture, not both")
        spec = None
        if args.fixture:
            spec = fixtures.load(args.fixture)
        elif args.spec:
            spec = parse_spec(args.spec)
        service = ProblemService(spec, horizon=args.horizon, max_cylinder=args.max_cylinder, cap=args.cap)
        report = service.run(args.command)
    except Exception as e:
        details = problem_details(e, instance)
        if isinstance(e, GroupDensityError) and details.status != EXIT_INTERNAL:
            logger.error(f"{details.title}: {details.detail}")
        else:
            logger.exception(f"{args.command} failed")
        _emit(ReportService.to_json(details))
        return details.status

    _emit(ReportService(args.format).render(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
