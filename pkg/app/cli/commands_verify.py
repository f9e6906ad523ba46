from __future__ import annotations

import argparse
import logging
from pathlib import Path

from app.cli.output import render
from app.settings import Settings
from app.suite.runner import MAX_DIM, MIN_DIM, run_verify

log = logging.getLogger(__name__)


def positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def register(subparsers: argparse._SubParsersAction, settings: Settings) -> None:
    parser = subparsers.add_parser("verify", help="run the identity and invariance checks over random configurations")
    parser.add_argument("--dim", type=int, choices=range(MIN_DIM, MAX_DIM + 1), default=3, help="n of the parent G(1,n)")
    parser.add_argument("--seed", type=int, default=settings.seed)
    parser.add_argument("--trials", type=positive_int, default=settings.trials)
    parser.add_argument("--tol", type=float, default=settings.tol)
    parser.add_argument("--json", action="store_true", help="print the machine-readable report")
    parser.add_argument("--out", type=Path, help="also write the machine-readable report here")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    report = run_verify(args.dim, args.seed, args.trials, args.tol)
    if args.out is not None:
        args.out.write_text(report.to_json(), encoding="utf-8")
        log.info("Report written: %s", args.out)
    print(report.to_json() if args.json else render("report.txt.j2", report=report), end="")
    return 0 if report.all_passed else 1
