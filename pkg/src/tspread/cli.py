"""Command line interface: ``tspread <subcommand> ...``.

Exit codes: 0 clean, 1 sweep found mismatches, 2 bad configuration or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from .borel import borel_gens
from .classify import classify_closed_form, classify_intro_variant
from .errors import InvalidInput, PreconditionViolation, Unsupported
from .harness import SweepConfig, render_dot, report_json, run_sweep
from .ideal import is_freiman_direct, mu_power
from .monomial import SpreadWord, parse_monomial
from .sortgraph import build_sorted_graph, is_chordal, is_freiman_via_chordality

EXIT_OK, EXIT_MISMATCH, EXIT_INVALID = 0, 1, 2


def _word(args: argparse.Namespace) -> SpreadWord:
    return SpreadWord.from_monomial(parse_monomial(args.u), args.t)


def cmd_gens(args: argparse.Namespace) -> int:
    gens = borel_gens(_word(args))
    names = [str(g) for g in gens.ordered()]
    if args.json:
        print(json.dumps({"generators": names, "count": len(names)}, indent=2))
    else:
        for name in names:
            print(name)
        print(f"count: {len(names)}")
    return EXIT_OK


def cmd_check(args: argparse.Namespace) -> int:
    u = _word(args)
    gens = borel_gens(u)
    verdict = is_freiman_direct(gens)
    chordal, cert = is_freiman_via_chordality(gens)
    extra = {"chordal": chordal, "agrees_chordal": chordal == verdict.is_freiman}
    if u.t >= 1:
        closed = classify_closed_form(u)
        extra["closed_form"] = closed.verdict
        extra["agrees_closed_form"] = closed.verdict == verdict.is_freiman
    extra["certificate"] = {
        "kind": cert.kind,
        "vertices": [str(v) for v in (cert.ordering or cert.cycle)],
    }
    print(report_json(verdict, **extra))
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    u = _word(args)
    res = classify_closed_form(u)
    intro = classify_intro_variant(u)
    print(json.dumps({
        "verdict": res.verdict,
        "case_label": res.case_label,
        "reductions": res.reductions,
        "intro_variant_verdict": intro.verdict,
        "agrees_with_intro": intro.verdict == res.verdict,
    }, indent=2))
    return EXIT_OK


def cmd_power(args: argparse.Namespace) -> int:
    n = mu_power(borel_gens(_word(args)), args.k)
    if args.json:
        print(json.dumps({"k": args.k, "mu": n}))
    else:
        print(n)
    return EXIT_OK


def cmd_graph(args: argparse.Namespace) -> int:
    g = build_sorted_graph(borel_gens(_word(args)))
    if args.dot:
        sys.stdout.write(render_dot(g))
        return EXIT_OK
    cert = is_chordal(g)
    data = {
        "vertices": [str(v) for v in g.vertices],
        "edges": [[str(a), str(b)] for a, b in g.edges()],
        "chordal": cert.chordal,
        "certificate": [str(v) for v in (cert.ordering or cert.cycle)],
    }
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(f"vertices: {len(g)}  edges: {len(data['edges'])}  chordal: {cert.chordal}")
        label = "PEO" if cert.chordal else "induced cycle"
        print(f"{label}: " + ", ".join(data["certificate"]))
    return EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    if args.max_index == "auto":
        bound = None
    else:
        try:
            bound = int(args.max_index)
        except ValueError:
            raise InvalidInput(f"--max-index must be an integer or 'auto', got {args.max_index!r}")
    cfg = SweepConfig(
        t_range=(args.t_min, args.t_max),
        d_range=(args.d_min, args.d_max),
        max_last_index=bound,
        power_check_k=args.k,
        workers=args.workers,
    )
    result = run_sweep(cfg)
    text = report_json(result)
    if args.out:
        Path(args.out).write_text(text + "\n")
    if args.json:
        print(text)
    else:
        _print_summary(result)
    return EXIT_OK if result.clean else EXIT_MISMATCH


def _print_summary(result) -> None:
    print(f"instances checked: {result.instances_checked}")
    print(f"agreements:        {result.agreements}")
    print(f"mismatches:        {len(result.mismatches)}")
    print(f"freiman instances: {result.freiman_count}")
    print(f"power checks:      {result.power_checks} ({len(result.power_failures)} failed)")
    print("intro discrepancies: " + (", ".join(
        f"{u} (t={u.t})" for u in result.intro_discrepancies) or "none"))
    for label, n in result.label_counts.items():
        print(f"  {label:14s} {n}")
    print(f"elapsed: {result.elapsed:.2f}s")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tspread", description="Freiman t-spread principal Borel ideals"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def word_cmd(name: str, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help)
        p.add_argument("--u", required=True, help='generator, e.g. "x3*x5"')
        p.add_argument("--t", type=int, required=True, help="spread parameter")
        p.add_argument("--json", action="store_true", help="JSON output")
        return p

    word_cmd("gens", "minimal generators of B_t(u)").set_defaults(func=cmd_gens)
    word_cmd("check", "Freiman verdict by all methods").set_defaults(func=cmd_check)
    word_cmd("classify", "closed-form classification").set_defaults(func=cmd_classify)
    p = word_cmd("power", "number of generators of the k-th power")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_power)
    p = word_cmd("graph", "sorted graph and chordality certificate")
    p.add_argument("--dot", action="store_true", help="emit DOT")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("sweep", help="exhaustive three-way cross-validation")
    p.add_argument("--t-min", type=int, default=1)
    p.add_argument("--t-max", type=int, default=3)
    p.add_argument("--d-min", type=int, default=1)
    p.add_argument("--d-max", type=int, default=5)
    p.add_argument("--max-index", default="auto", help="bound on i_d, or 'auto' = (d-1)t+6")
    p.add_argument("--k", type=int, default=3, help="validate the power formula up to k")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--json", action="store_true", help="print the JSON report")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InvalidInput, PreconditionViolation, Unsupported) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
