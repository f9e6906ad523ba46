from __future__ import annotations

import argparse

from app.cli.output import render
from app.settings import Settings
from app.suite.demos import DEMOS, DemoParams, run_demo


def coefficient_list(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def register(subparsers: argparse._SubParsersAction, settings: Settings) -> None:
    parser = subparsers.add_parser("demo", help="evaluate one closed form against the direct product")
    parser.add_argument("name", choices=list(DEMOS))
    parser.add_argument("--alpha", type=float, default=1.0)
    parser.add_argument("--beta", type=float, default=0.0)
    parser.add_argument("--theta", type=float, help="real angle; overrides --alpha")
    parser.add_argument("--a", type=coefficient_list, default=DemoParams.a, help="a0,a1,a2,a3")
    parser.add_argument("--b", type=coefficient_list, default=DemoParams.b, help="b0,b1,b2,b3")
    parser.add_argument("--tol", type=float, default=settings.tol)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    params = DemoParams(alpha=args.alpha, beta=args.beta, theta=args.theta, a=args.a, b=args.b)
    result = run_demo(args.name, params)
    print(render("demo.txt.j2", result=result, tol=args.tol), end="")
    return 0 if result.worst_residual() <= args.tol else 1
