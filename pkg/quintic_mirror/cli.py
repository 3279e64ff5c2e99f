from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from typing import Any, Sequence

from pydantic import ValidationError

from quintic_mirror.algebra.cohomology import parse_weights
from quintic_mirror.commands import get_command_registry, run_command
from quintic_mirror.config import settings
from quintic_mirror.errors import QuinticError, WeightParseError
from quintic_mirror.models import ErrorReport, RunConfig, RunReport

logger = logging.getLogger("quintic-cli")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2

# "verify ode" and "oracle lines" are spelled as two words on the command line
GROUP_WORDS = ("verify", "oracle")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quintic",
        description="Exact mirror-theorem computations for the quintic threefold.",
    )
    parser.add_argument(
        "command",
        nargs="+",
        help="Command name, e.g. 'instantons', 'verify ode' or 'oracle lines'.",
    )
    parser.add_argument(
        "--max-degree",
        "--order",
        "--q-order",
        dest="q_order",
        type=int,
        default=None,
        help="Maximum q-degree.",
    )
    parser.add_argument("--z-order", dest="z_order", type=int, default=None)
    parser.add_argument(
        "--lambdas",
        default=None,
        help='Five comma-separated rational torus weights summing to zero, e.g. "1,2,3,-1,-5".',
    )
    output = parser.add_mutually_exclusive_group()
    output.add_argument("--json", dest="output", action="store_const", const="json")
    output.add_argument("--csv", dest="output", action="store_const", const="csv")
    output.add_argument("--pretty", dest="output", action="store_const", const="pretty")
    parser.set_defaults(output="pretty")
    return parser


def normalize_command(words: Sequence[str]) -> str:
    if len(words) == 2 and words[0] in GROUP_WORDS:
        return f"{words[0]}-{words[1]}"
    return "-".join(words)


def parse_config(argv: Sequence[str] | None = None) -> RunConfig:
    parser = build_parser()
    args = parser.parse_args(argv)
    command = normalize_command(args.command)
    registry = get_command_registry()
    if command not in registry:
        parser.error(f"unknown command '{command}'; choose from: {', '.join(sorted(registry))}")
    try:
        return RunConfig(
            command=command,
            q_order=args.q_order,
            z_order=args.z_order,
            lambdas=args.lambdas,
            output=args.output,
        )
    except ValidationError as exc:
        parser.error(str(exc))


def _cell(value: Any) -> str:
    if isinstance(value, (list, dict)):
        return json.dumps(value, sort_keys=True)
    if isinstance(value, bool):
        return "true" if value else "false"
    return "" if value is None else str(value)


def render_csv(report: RunReport) -> str:
    fieldnames: list[str] = []
    for row in report.results:
        for key in row:
            if key not in fieldnames:
                fieldnames.append(key)
    buffer = io.StringIO()
    writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator="\n")
    writer.writeheader()
    for row in report.results:
        writer.writerow({key: _cell(value) for key, value in row.items()})
    return buffer.getvalue()


def render_pretty(report: RunReport) -> str:
    status = "PASS" if report.passed else "FAIL"
    lines = [f"{report.command}: {status} ({report.elapsed_ms} ms)"]
    for key, value in report.params.items():
        lines.append(f"  {key} = {_cell(value)}")
    for row in report.results:
        lines.append("  " + "  ".join(f"{key}={_cell(value)}" for key, value in row.items()))
    return "\n".join(lines) + "\n"


def render(report: RunReport, output: str) -> str:
    if output == "json":
        return json.dumps(report.to_json_dict(), indent=2) + "\n"
    if output == "csv":
        return render_csv(report)
    return render_pretty(report)


def _emit_error(exc: QuinticError, output: str) -> None:
    error = ErrorReport(error=type(exc).__name__, message=str(exc), details=exc.details())
    if output == "json":
        sys.stdout.write(json.dumps(error.model_dump(mode="json"), indent=2) + "\n")
    else:
        sys.stderr.write(f"{error.error}: {error.message}\n")
        for key, value in error.details.items():
            sys.stderr.write(f"  {key} = {_cell(value)}\n")


def run(config: RunConfig) -> int:
    try:
        if config.lambdas is not None:
            parse_weights(config.lambdas)
        report = run_command(config)
    except WeightParseError as exc:
        _emit_error(exc, config.output)
        return EXIT_USAGE
    except QuinticError as exc:
        logger.error("command %s failed: %s", config.command, exc)
        _emit_error(exc, config.output)
        return EXIT_FAILED
    sys.stdout.write(render(report, config.output))
    return EXIT_OK if report.passed else EXIT_FAILED


def main(argv: Sequence[str] | None = None) -> int:
    logging.basicConfig(
        level=settings.log_level,
        format="%(asctime)s %(levelname)s %(name)s - %(message)s",
        stream=sys.stderr,
    )
    return run(parse_config(argv))


if __name__ == "__main__":
    sys.exit(main())
