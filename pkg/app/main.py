from __future__ import annotations

import argparse
import logging
import sys

from app.algebra.errors import AlgebraError
from app.cli import commands_construct, commands_demo, commands_project, commands_verify
from app.cli.output import APP_NAME
from app.settings import Settings, load_settings

log = logging.getLogger(__name__)

COMMANDS = (commands_verify, commands_demo, commands_construct, commands_project)


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=APP_NAME,
        description="Clifford algebra engine with the little photon algebra and relative-view figures.",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for module in COMMANDS:
        module.register(subparsers, settings)
    return parser


def main(argv: list[str] | None = None) -> int:
    try:
        settings = load_settings()
    except RuntimeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    # stdout carries reports only; logs go to stderr.
    logging.basicConfig(
        level=settings.log_level,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    args = build_parser(settings).parse_args(argv)
    try:
        return args.handler(args)
    except (AlgebraError, ValueError, OSError) as exc:
        log.error("%s failed: %s", args.command, exc)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
