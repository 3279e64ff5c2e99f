from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).resolve().parents[1]
if str(PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(PROJECT_ROOT))

from quintic_mirror.commands import get_command_registry, run_command
from quintic_mirror.errors import QuinticError
from quintic_mirror.models import RunConfig

logging.basicConfig(
    level=logging.INFO,
    format="%(asctime)s %(levelname)s %(name)s - %(message)s",
)
logger = logging.getLogger("quintic-suite")


def main() -> int:
    parser = argparse.ArgumentParser(description="Run every registered command at its default orders.")
    parser.add_argument("--only", nargs="*", default=None, help="Restrict to these command names.")
    args = parser.parse_args()

    names = args.only or list(get_command_registry())
    summary: dict[str, dict[str, object]] = {}
    for name in names:
        try:
            report = run_command(RunConfig(command=name))
        except QuinticError as exc:
            logger.error("%s raised %s: %s", name, type(exc).__name__, exc)
            summary[name] = {"pass": False, "error": type(exc).__name__}
            continue
        summary[name] = {"pass": report.passed, "elapsed_ms": report.elapsed_ms}

    print(json.dumps(summary, indent=2))
    return 0 if all(item["pass"] for item in summary.values()) else 1


if __name__ == "__main__":
    sys.exit(main())
