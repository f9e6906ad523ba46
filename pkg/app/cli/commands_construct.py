from __future__ import annotations

import argparse

from app.algebra.signature import TABLE_MAX_DIMS, Signature, make_algebra
from app.algebra.text import format_multivector, parse_multivector
from app.cli.output import render
from app.photon.checks import isomorphism_check, reference_signature
from app.photon.little import construct_little_algebra, little_generators
from app.settings import Settings


def parent_signature(text: str) -> Signature:
    try:
        counts = [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected p,q such as 1,3, got {text!r}") from None
    if len(counts) not in (2, 3):
        raise argparse.ArgumentTypeError(f"expected p,q or p,q,r, got {text!r}")
    try:
        return Signature(*counts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def register(subparsers: argparse._SubParsersAction, settings: Settings) -> None:
    parser = subparsers.add_parser("construct", help="build W(k) from a lightlike vector and check its Cayley table")
    parser.add_argument("--parent", type=parent_signature, required=True, help="p,q of the Minkowski parent, e.g. 1,3")
    parser.add_argument("--k", required=True, help='lightlike vector, e.g. "1*e0 + 1*e3"')
    parser.add_argument("--tol", type=float, default=settings.tol)
    parser.set_defaults(handler=handle)


def handle(args: argparse.Namespace) -> int:
    algebra = make_algebra(args.parent)
    k = parse_multivector(args.k, algebra)
    la = construct_little_algebra(algebra, k)
    gens = little_generators(la)

    context = {
        "parent": str(args.parent),
        "k": format_multivector(k),
        "frame": [(f"e{i}", format_multivector(e)) for i, e in enumerate(la.frame)],
        "translations": [(f"N{i}", format_multivector(t)) for i, t in enumerate(gens.translations, start=1)],
        "rotations": [(f"J{i}{j}", format_multivector(r)) for (i, j), r in zip(gens.rotation_planes, gens.rotations)],
        "reference": str(reference_signature(la)),
        "verdict": "",
        "entries": [],
        "skipped": "",
    }
    passed = True
    if algebra.dims <= TABLE_MAX_DIMS:
        result = isomorphism_check(la, args.tol)
        passed = result.passed
        context["verdict"] = "PASS" if passed else "FAIL"
        context["entries"] = list(result.entries)
    else:
        context["skipped"] = f"Cayley tables need at most {TABLE_MAX_DIMS} parent generators"
    print(render("construct.txt.j2", **context), end="")
    return 0 if passed else 1
