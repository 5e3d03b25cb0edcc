"""Command-line harness: verify, classify, show-relation, report."""
from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .hirota.catalog import (FOURPOINT_KINDS, ONE_COMPONENT, TWO_POINT_LABELS, build_canonical_4pt,
                             build_two_point, fourpoint_variants, two_point_variants, uses_beta)
from .hirota.dsl import build_from_spec
from .hirota.genhm import classify_schemes, signature_text
from .hirota.relation import relation_text
from .suites import SUITES, ConfigError, SuiteConfig, emit_report, exit_code, run_suite
from .taueval import TauArgument


def _int_list(s: str) -> List[int]:
    return [int(x) for x in s.split(",") if x.strip()]


def load_config(args) -> SuiteConfig:
    d = {}
    if args.config:
        with open(args.config) as f:
            d = json.load(f)
    if args.N is not None:
        d["N"] = args.N
    if args.D is not None:
        d["D"] = args.D
    if args.window is not None:
        d["window"] = _int_list(args.window)
    if args.seeds is not None:
        d["seeds"] = _int_list(args.seeds)
    if args.suites is not None:
        d["suites"] = [s for s in args.suites.split(",") if s]
    if args.g_seed_offset is not None or args.g_factors is not None:
        g = dict(d.get("g_spec", {}))
        g.pop("inline", None)
        if args.g_seed_offset is not None:
            g["seed_offset"] = args.g_seed_offset
        if args.g_factors is not None:
            g["factors"] = args.g_factors
        d["g_spec"] = g
    if args.emendations is not None:
        d["emendations"] = args.emendations
    if args.mutate:
        d["mutate"] = True
    if args.record_timings:
        d["record_timings"] = True
    if args.jobs is not None:
        d["jobs"] = args.jobs
    return SuiteConfig.from_dict(d)


def cmd_verify(args) -> int:
    try:
        cfg = load_config(args)
    except (ConfigError, OSError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    progress = None
    if args.verbose:
        progress = lambda t: print(f"running {t[0]}/{t[1]} {t[2]}", file=sys.stderr)
    report = run_suite(cfg, progress)
    text = emit_report(report, args.format)
    if args.output:
        with open(args.output, "w") as f:
            f.write(text)
        print(f"failed: {report['summary']['failed']}")
    else:
        sys.stdout.write(text)
    return exit_code(report)


def cmd_classify(args) -> int:
    sigs = classify_schemes(args.M, intertwining=args.intertwining, mod_symmetry=args.mod_symmetry)
    for s in sigs:
        print(signature_text(s))
    print(f"count: {len(sigs)}")
    return 0


def _relation_for(label: str, N: int, variant: Optional[str]):
    if label in FOURPOINT_KINDS:
        base = TauArgument.make(tuple([0] * N), tuple([0] * N))
        ind = tuple(min(i, N) for i in (1, 2, 1, 2))
        return build_canonical_4pt(label, ind, base, variant=variant or fourpoint_variants(label)[-1])
    if label in TWO_POINT_LABELS:
        base = TauArgument.make(tuple([0] * N), tuple([0] * N))
        ind = (1, 2) if uses_beta(label) else (1,)
        return build_two_point(label, ind, base, variant=variant or "printed")
    if label in ONE_COMPONENT:
        return build_from_spec(ONE_COMPONENT[label], (1, 1, 1, 1), TauArgument.make((0,), (0,)))
    raise KeyError(label)


def cmd_show_relation(args) -> int:
    try:
        rel = _relation_for(args.label, args.N, args.variant)
    except KeyError as e:
        known = ", ".join(list(FOURPOINT_KINDS) + list(TWO_POINT_LABELS) + list(ONE_COMPONENT))
        print(f"error: unknown label or variant {e}; known labels: {known}", file=sys.stderr)
        return 2
    print(relation_text(rel))
    if args.label in TWO_POINT_LABELS:
        print("variants: " + ", ".join(two_point_variants(args.label)))
    elif args.label in FOURPOINT_KINDS:
        print("variants: " + ", ".join(fourpoint_variants(args.label)))
    return 0


def cmd_report(args) -> int:
    with open(args.input) as f:
        report = json.load(f)
    sys.stdout.write(emit_report(report, args.format))
    return exit_code(report)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pfafftoda", description="Exact checks of multi-component Pfaff-Toda relations.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run suites from a JSON config, flags override the file")
    v.add_argument("--config", help="SuiteConfig JSON file")
    v.add_argument("--N", type=int)
    v.add_argument("--D", type=int)
    v.add_argument("--window", help="override as lo,hi")
    v.add_argument("--seeds", help="comma-separated seeds")
    v.add_argument("--suites", help="comma-separated subset of " + ",".join(SUITES))
    v.add_argument("--g-seed-offset", type=int)
    v.add_argument("--g-factors", type=int)
    v.add_argument("--emendations", choices=("printed-only", "both"))
    v.add_argument("--mutate", action="store_true", help="add mutated 4-point relations (negative controls)")
    v.add_argument("--record-timings", action="store_true")
    v.add_argument("--jobs", type=int)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--output", help="write the report here instead of stdout")
    v.add_argument("--verbose", action="store_true")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("classify", help="list admissible scheme signatures")
    c.add_argument("--M", type=int, required=True)
    c.add_argument("--intertwining", action="store_true")
    c.add_argument("--mod-symmetry", action="store_true")
    c.set_defaults(func=cmd_classify)

    s = sub.add_parser("show-relation", help="print a relation in shorthand")
    s.add_argument("--label", required=True)
    s.add_argument("--variant")
    s.add_argument("--N", type=int, default=2)
    s.set_defaults(func=cmd_show_relation)

    r = sub.add_parser("report", help="re-emit a saved JSON report")
    r.add_argument("--input", required=True)
    r.add_argument("--format", choices=("json", "text"), default="text")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
