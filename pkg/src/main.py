import argparse
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path

from pydantic import ValidationError

from exceptions import MonogamyError
from harness.cmd_check import cmd_check
from harness.cmd_fuzz import cmd_fuzz
from harness.cmd_reproduce_paper import cmd_reproduce_paper
from harness.cmd_wclass_scan import cmd_wclass_scan
from models import RunConfig
from tolerances import SATISFIED_TOL

COMMANDS: dict[str, Callable[[RunConfig], int]] = {
    "check": cmd_check,
    "fuzz": cmd_fuzz,
    "reproduce-paper": cmd_reproduce_paper,
    "wclass-scan": cmd_wclass_scan,
}

LOG_LEVELS = {0: logging.WARNING, 1: logging.INFO}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qmonogamy",
        description="Concurrence-based monogamy bounds for N-qubit pure states.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debug output")
    sub = parser.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="evaluate every applicable inequality on a state file")
    check.add_argument("state_file", type=Path)
    check.add_argument("--tolerance", type=float, default=SATISFIED_TOL)
    check.add_argument("--out", type=Path)
    check.add_argument("--format", choices=["json", "csv"], default="json")

    fuzz = sub.add_parser("fuzz", help="evaluate the inequalities on seeded Haar-random states")
    fuzz.add_argument("--qubits", type=int, required=True)
    fuzz.add_argument("--count", type=int, required=True)
    fuzz.add_argument("--seed", type=int, required=True)
    fuzz.add_argument("--tolerance", type=float, default=SATISFIED_TOL)
    fuzz.add_argument("--out", type=Path)
    fuzz.add_argument("--format", choices=["json", "csv"], default="json")

    reproduce = sub.add_parser("reproduce-paper", help="recompute every worked example and compare")
    reproduce.add_argument("--out", type=Path)

    scan = sub.add_parser("wclass-scan", help="CSV of the W-class bounds over sampled coefficient vectors")
    scan.add_argument("--n", dest="qubits", type=int, required=True)
    scan.add_argument("--count", type=int, required=True)
    scan.add_argument("--seed", type=int, required=True)
    scan.add_argument("--tolerance", type=float, default=SATISFIED_TOL)
    scan.add_argument("--out", type=Path)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    fields = {key: value for key, value in vars(args).items() if key != "verbose" and value is not None}
    return RunConfig(**fields)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; those are input errors here
        return 0 if exc.code == 0 else 1

    logging.basicConfig(
        level=LOG_LEVELS.get(args.verbose, logging.DEBUG),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )

    try:
        config = config_from_args(args)
        return COMMANDS[config.command](config)
    except ValidationError as exc:
        first = exc.errors()[0]
        location = ".".join(str(part) for part in first["loc"]) or "config"
        print(f"error[E_CONFIG]: {location}: {first['msg']}", file=sys.stderr)
        return 1
    except MonogamyError as exc:
        print(f"error[{exc.code}]: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
