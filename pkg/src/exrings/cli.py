"""Command line entry point.

Three commands: ``verify`` runs registered checkers and reports verdicts,
``classify`` places a user-supplied subgroup in the Lie ideal taxonomy,
``list`` prints the registry.  Environment variables with the ``EXRINGS_``
prefix (SEED, SAMPLES, DEGREE, RING) supply defaults for the matching
flags.  Exit status: 0 all verdicts passed, 1 some failed, 2 usage or
context errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .checkers import THEOREMS
from .errors import ContextError, TheoremFalsified
from .matrices import CONTEXTS
from .subgroups import c_span, classify_lie_ideal, is_lie_ideal, parse_generator_file
from .verdicts import RunConfig, render_report

_RINGS = tuple(sorted(CONTEXTS))


def _env(name, fallback, convert=int):
    raw = os.environ.get("EXRINGS_" + name)
    if raw is None:
        return fallback
    try:
        return convert(raw)
    except ValueError as exc:
        raise ContextError(f"bad EXRINGS_{name} value {raw!r}") from exc


def build_parser():
    p = argparse.ArgumentParser(
        prog="exrings",
        description="Exact verification workbench for 2x2 matrix rings over "
        "GF(2)-based scalars.",
    )
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run checkers and report verdicts")
    v.add_argument(
        "--theorem",
        required=True,
        metavar="ID",
        help="statement id from `exrings list`, or `all`",
    )
    v.add_argument(
        "--ring",
        choices=_RINGS,
        default=_env("RING", None, str),
        help="restrict to one ring (default: each checker's own defaults)",
    )
    v.add_argument("--degree", type=int, default=_env("DEGREE", 8), help="window size for polynomial rings")
    v.add_argument("--samples", type=int, default=_env("SAMPLES", 1000), help="randomized case budget")
    v.add_argument("--seed", type=int, default=_env("SEED", 42), help="base seed for randomized cases")
    v.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    c = sub.add_parser("classify", help="classify a subgroup given by a generator file")
    c.add_argument("path", help="generator file (bits/poly-full/poly-ideal lines), or - for stdin")
    c.add_argument("--ring", choices=_RINGS, default=_env("RING", "m2-poly2", str))
    c.add_argument("--degree", type=int, default=_env("DEGREE", 8))
    c.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")

    ls = sub.add_parser("list", help="list registered checkers")
    ls.add_argument("--format", choices=("text", "json"), default="text", dest="fmt")
    return p


def _verify(args):
    if args.theorem == "all":
        infos = [THEOREMS[k] for k in sorted(THEOREMS)]
        if args.ring:
            infos = [i for i in infos if args.ring in i.rings]
    else:
        info = THEOREMS.get(args.theorem)
        if info is None:
            known = ", ".join(sorted(THEOREMS))
            raise ContextError(f"unknown statement id {args.theorem!r}; known: {known}")
        infos = [info]
    verdicts = []
    for info in infos:
        rings = (args.ring,) if args.ring else info.defaults
        for ring in rings:
            cfg = RunConfig(
                ring=ring, degree=args.degree, samples=args.samples, seed=args.seed
            )
            verdicts.append(info.run(cfg))
    print(render_report(verdicts, args.fmt))
    return 0 if all(v.passed for v in verdicts) else 1


def _classify(args):
    ctx = CONTEXTS.get(args.ring)
    if ctx is None:
        raise ContextError(f"unknown ring {args.ring!r}")
    text = sys.stdin.read() if args.path == "-" else open(args.path, encoding="utf-8").read()
    try:
        sg = parse_generator_file(text, ctx)
    except ValueError as exc:
        raise ContextError(str(exc)) from exc
    n = args.degree
    lie = is_lie_ideal(sg, n)
    report = {
        "ring": args.ring,
        "window": n,
        "generators": len(sg.generators),
        "slice_dim": sg.slice(n).dim,
        "lie_ideal": lie,
    }
    if lie:
        report["class"] = classify_lie_ideal(sg, n).value
        report["span_dim"] = c_span(sg).dim
    if args.fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=True))
    else:
        for key in ("ring", "window", "generators", "slice_dim", "lie_ideal", "class", "span_dim"):
            if key in report:
                print(f"{key}: {report[key]}")
    return 0


def _list(args):
    infos = [THEOREMS[k] for k in sorted(THEOREMS)]
    if args.fmt == "json":
        payload = [
            {
                "theorem": i.theorem,
                "summary": i.summary,
                "rings": list(i.rings),
                "defaults": list(i.defaults),
            }
            for i in infos
        ]
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        width = max(len(i.theorem) for i in infos)
        for i in infos:
            print(f"{i.theorem:<{width}}  [{', '.join(i.rings)}]")
            print(f"{'':<{width}}  {i.summary}")
    return 0


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {"verify": _verify, "classify": _classify, "list": _list}
    try:
        return handlers[args.command](args)
    except (ContextError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TheoremFalsified as exc:
        print(f"falsified: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
