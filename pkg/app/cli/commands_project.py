from __future__ import annotations

import argparse
import logging
from pathlib import Path

from app.settings import Settings
from app.view.render import write_scene
from app.view.scenes import FIGURES, build_scene

log = logging.getLogger(__name__)


def register(subparsers: argparse._SubParsersAction, settings: Settings) -> None:
    parser = subparsers.add_parser("project", help="write a relative-view figure as SVG or CSV")
    parser.add_argument("--fig", choices=list(FIGURES), required=True)
    parser.add_argument("--time", type=float, default=settings.slice_time, help="ct of the slicing plane")
    parser.add_argument("--out", type=Path, required=True, help="output file; .svg or .csv")
    parser.add_argument("--arrows", action="store_true", help="draw orientation arrowheads on lines (SVG only)")
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    scene = build_scene(args.fig, args.time)
    path = write_scene(scene, args.out, args.arrows)
    log.info("Scene written: %s", path)
    print(f"wrote {path}")
    return 0
