"""Suite configuration, check scheduling and verification reports."""
from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence, Tuple

import jsonschema

from . import __version__, checks
from .clifford import CLIFFORD_SCHEMA, CliffordElement
from .fock import Window
from .hirota import catalog
from .hirota.catalog import (EMENDATIONS, FOURPOINT_KINDS, MULTI_TOKEN_CORRECTIONS, ONE_COMPONENT,
                             SUSPECTED, TWO_POINT_LABELS, build_canonical_4pt, build_two_point,
                             fourpoint_spec, fourpoint_variants, two_point_variants, uses_beta)
from .hirota.dsl import apply_edit, build_from_spec, mutation_edits
from .hirota.equivalence import (DOCUMENTED_PAIRS, collapse_to_canonical, equivalence_2110_3001,
                                 scheme_equivalence)
from .hirota.genhm import Scheme, build_genHM, classify_schemes, signature_text, slot_vars
from .hirota.relation import (Relation, clear_denominators, relation_window, residual,
                              same_terms)
from .hirota.search import G_FACTORS, MUTATION_CONFIGS, choose_base, default_g
from .series import TruncSeries, mono_text
from .taueval import EvalContext, TauArgument, shorthand, window_bound

REPORT_VERSION = "1"
SUITES = ("algebra", "identity", "bosonization", "tau", "fourpoint", "twopoint", "classify", "equivalence")
EMENDATION_MODES = ("printed-only", "both")

# the eight M = 4 intertwining signatures expected modulo symmetry
EXPECTED_M4 = ((3, 0, 1, 0), (3, 0, 0, 1), (2, 1, 1, 0), (2, 1, 0, 1),
               (2, 0, 2, 0), (2, 0, 1, 1), (2, 0, 0, 2), (1, 1, 1, 1))

# index patterns for 4-point checks (N = 2), ordered so that every seed
# sees a mix of distinct and coincident indices
FOURPOINT_PATTERNS = ((1, 2, 1, 2), (1, 1, 2, 2), (1, 2, 2, 1), (2, 1, 1, 1),
                      (1, 1, 1, 2), (2, 2, 1, 1), (1, 1, 1, 1), (2, 1, 2, 1))
PATTERNS_PER_SEED = 4

EQUIVALENCE_INDICES = ((1, 2, 3, 4), (1, 1, 2, 2), (1, 2, 1, 2), (2, 1, 1, 1), (1, 1, 1, 1))
MUTATION_N, MUTATION_D = 2, 3

CONFIG_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "SuiteConfig",
    "type": "object",
    "additionalProperties": False,
    "properties": {
        "N": {"type": "integer", "minimum": 1},
        "D": {"type": "integer", "minimum": 1},
        "window": {"type": ["array", "null"], "items": {"type": "integer"}, "minItems": 2, "maxItems": 2},
        "g_spec": {
            "oneOf": [
                {"type": "object", "additionalProperties": False, "required": ["inline"],
                 "properties": {"inline": CLIFFORD_SCHEMA}},
                {"type": "object", "additionalProperties": False,
                 "properties": {"seed_offset": {"type": "integer"},
                                "factors": {"type": "integer", "minimum": 0}}},
            ]
        },
        "seeds": {"type": "array", "items": {"type": "integer"}, "minItems": 1},
        "suites": {"type": "array", "items": {"enum": list(SUITES)}, "minItems": 1, "uniqueItems": True},
        "emendations": {"enum": list(EMENDATION_MODES)},
        "mutate": {"type": "boolean"},
        "record_timings": {"type": "boolean"},
        "M": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        "jobs": {"type": "integer", "minimum": 1},
    },
}


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SuiteConfig:
    N: int = 2
    D: int = 5
    window: Optional[Tuple[int, int]] = None
    g_spec: dict = field(default_factory=lambda: {"seed_offset": 0, "factors": G_FACTORS})
    seeds: Tuple[int, ...] = (0, 1, 2)
    suites: Tuple[str, ...] = SUITES
    emendations: str = "both"
    mutate: bool = False
    record_timings: bool = False
    M: Tuple[int, ...] = (3, 4)
    jobs: int = 1

    @classmethod
    def from_dict(cls, d: dict) -> "SuiteConfig":
        try:
            jsonschema.validate(d, CONFIG_SCHEMA)
        except jsonschema.ValidationError as e:
            raise ConfigError(f"invalid config: {e.message}") from None
        kw = dict(d)
        for k in ("seeds", "suites", "M"):
            if k in kw:
                kw[k] = tuple(kw[k])
        if kw.get("window") is not None:
            kw["window"] = tuple(kw["window"])
        cfg = cls(**kw)
        cfg.validate()
        return cfg

    def validate(self):
        if not self.suites:
            raise ConfigError("at least one suite must be selected")
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigError(f"unknown suites {bad}")
        if self.N < 1 or self.D < 1:
            raise ConfigError("need N >= 1 and D >= 1")
        if self.emendations not in EMENDATION_MODES:
            raise ConfigError(f"emendations must be one of {EMENDATION_MODES}")
        if self.window is not None:
            try:
                Window(self.N, *self.window)
            except ValueError as e:
                raise ConfigError(str(e)) from None
        if "inline" in self.g_spec:
            g = CliffordElement.from_records(self.g_spec["inline"])
            if g.max_component() > self.N:
                raise ConfigError("inline Clifford element uses a component beyond N")

    def to_dict(self) -> dict:
        """Echo for reports; ``jobs`` is left out so reports do not depend on it."""
        return {"N": self.N, "D": self.D, "window": list(self.window) if self.window else None,
                "g_spec": self.g_spec, "seeds": list(self.seeds), "suites": list(self.suites),
                "emendations": self.emendations, "mutate": self.mutate,
                "record_timings": self.record_timings, "M": list(self.M)}

    def g_for(self, seed: int, N: Optional[int] = None) -> CliffordElement:
        if "inline" in self.g_spec:
            return CliffordElement.from_records(self.g_spec["inline"])
        return default_g(seed + self.g_spec.get("seed_offset", 0), N or self.N,
                         self.g_spec.get("factors", G_FACTORS))

    def context(self, g: CliffordElement, N: Optional[int] = None, D: Optional[int] = None) -> EvalContext:
        N = N or self.N
        w = Window(N, *self.window) if self.window else None
        return EvalContext(g=g, D=D or self.D, N=N, window=w)


# -- records -----------------------------------------------------------------

def series_first_text(s: TruncSeries) -> Optional[str]:
    lt = s.leading_term()
    if lt is None:
        return None
    m, c = lt
    body = mono_text(m)
    return f"{c} * {body}" if body else str(c)


def make_record(suite: str, label: str, params: dict, ok: bool, *, window=None, order=None,
                first=None, emendation="none", flagged=False, expected="zero", error=None) -> dict:
    """``residual_zero`` is whether the checked quantity vanished; ``passed``
    compares it with ``expected`` (controls expect a nonzero value)."""
    zero = ok if expected == "zero" else not ok
    rec = {"suite": suite, "relation_label": label, "params": params,
           "window_used": window, "order": order, "residual_zero": zero,
           "first_nonzero_monomial": first, "emendation_used": emendation,
           "expected": expected, "passed": ok, "flagged": flagged}
    if error:
        rec["error"] = error
    return rec


def _window_text(w: Window) -> str:
    return f"[{w.j_min},{w.j_max})"


def _arg_params(a: TauArgument) -> dict:
    return {"n": list(a.n), "nbar": list(a.nbar)}


def _g_params(g: CliffordElement) -> list:
    return g.to_records()


def relation_record(suite: str, rel: Relation, ctx: EvalContext, params: dict,
                    emendation: str = "none", flagged: bool = False) -> dict:
    cleared = clear_denominators(rel)
    params = dict(params, base=_arg_params(rel.base), trivial=bool(rel.meta_dict().get("trivial", False)))
    w = relation_window(cleared, ctx)
    if ctx.window is not None:
        for a in cleared.arguments():
            need = window_bound(a, ctx)
            if not ctx.window.covers(need):
                return make_record(suite, rel.label, params, False, window=_window_text(w), order=ctx.D,
                                   emendation=emendation, flagged=flagged,
                                   error=f"window override {_window_text(ctx.window)} does not cover "
                                         f"{_window_text(need)} needed by {shorthand(a, rel.base)}")
    r = residual(cleared, ctx, w)
    return make_record(suite, rel.label, params, r.is_zero(), window=_window_text(w), order=ctx.D,
                       first=series_first_text(r), emendation=emendation, flagged=flagged)


def _value_record(suite: str, label: str, params: dict, value: Fraction, expected: str = "zero",
                  flagged: bool = False) -> dict:
    ok = (value == 0) if expected == "zero" else (value != 0)
    return make_record(suite, label, params, ok, first=None if value == 0 else f"max |residual| = {value}",
                       expected=expected, flagged=flagged)


def _bool_record(suite: str, label: str, params: dict, ok: bool, detail: Optional[str] = None,
                 flagged: bool = False, order=None) -> dict:
    return make_record(suite, label, params, ok, first=None if ok else detail, flagged=flagged, order=order)


# -- suite tasks -------------------------------------------------------------
# A task is a (suite, name, args) tuple; run_task turns one into records.

Task = Tuple[str, str, tuple]


def plan(cfg: SuiteConfig) -> List[Task]:
    tasks: List[Task] = []
    for suite in cfg.suites:
        if suite == "algebra":
            for n in sorted({1, 2, 3, cfg.N}):
                tasks.append((suite, "anticommutators", (n,)))
            tasks.append((suite, "commutators", ()))
            tasks.append((suite, "charge_eigenvalues", ()))
        elif suite == "identity":
            tasks.append((suite, "quartic_control", ()))
            for s in cfg.seeds:
                tasks.append((suite, "full_basis", (s,)))
                tasks.append((suite, "probe_pairs", (s,)))
        elif suite == "bosonization":
            for n in range(1, min(cfg.N, 2) + 1):
                tasks.append((suite, "rules", (n,)))
            tasks.append((suite, "sign_factors", ()))
        elif suite == "tau":
            tasks.append((suite, "vacuum", ()))
            tasks.append((suite, "two_point", ()))
        elif suite == "fourpoint":
            for kind in FOURPOINT_KINDS:
                for s in cfg.seeds:
                    tasks.append((suite, kind, (s,)))
            tasks.append((suite, "reductions", ()))
            if cfg.mutate:
                for kind in FOURPOINT_KINDS:
                    tasks.append((suite, "mutations", (kind,)))
        elif suite == "twopoint":
            for label in TWO_POINT_LABELS:
                for s in cfg.seeds:
                    tasks.append((suite, label, (s,)))
            tasks.append((suite, "one_component", ()))
        elif suite == "classify":
            for m in cfg.M:
                tasks.append((suite, "schemes", (m,)))
        elif suite == "equivalence":
            for ind in EQUIVALENCE_INDICES:
                tasks.append((suite, "term_maps", (ind,)))
    return tasks


def _variants_to_run(label_variants: List[str], mode: str) -> List[str]:
    if mode == "printed-only":
        return ["printed"]
    return label_variants


def _emendation_text(label: str, variant: str, spec_printed) -> str:
    if variant == "printed":
        return "printed"
    if variant == "emended":
        return "single-token: " + EMENDATIONS[label].describe(spec_printed)
    if variant == "corrected" and label in MULTI_TOKEN_CORRECTIONS:
        return "multi-token: " + "; ".join(e.describe(spec_printed) for e in MULTI_TOKEN_CORRECTIONS[label])
    return variant


def _task_fourpoint(cfg: SuiteConfig, kind: str, seed: int) -> List[dict]:
    out = []
    N = cfg.N
    g = cfg.g_for(seed)
    ctx = cfg.context(g)
    variants = fourpoint_variants(kind)
    reference = variants[-1]
    pats = [(1, 1, 1, 1)] if N == 1 else [
        tuple(min(i, N) for i in FOURPOINT_PATTERNS[(PATTERNS_PER_SEED * seed + k) % len(FOURPOINT_PATTERNS)])
        for k in range(PATTERNS_PER_SEED)]
    for ind in dict.fromkeys(pats):
        rng = random.Random(f"fourpoint:{kind}:{seed}:{ind}")
        base, _ = choose_base(lambda b: build_canonical_4pt(kind, ind, b, variant=reference), g, N, rng)
        for v in _variants_to_run(variants, cfg.emendations):
            rel = build_canonical_4pt(kind, ind, base, variant=v)
            flagged = v == "printed" and len(variants) > 1
            emend = "none" if len(variants) == 1 else ("printed" if v == "printed" else "multi-token: corrected form")
            params = {"seed": seed, "indices": list(ind), "vars": ["a", "b", "c", "d"], "N": N,
                      "variant": v, "g": _g_params(g)}
            out.append(relation_record("fourpoint", rel, ctx, params, emend, flagged))
    return out


def _task_reductions(cfg: SuiteConfig) -> List[dict]:
    """genHM with empty barred slots has no RHS and still vanishes."""
    out = []
    N = max(cfg.N, 2)
    for seed in cfg.seeds:
        g = cfg.g_for(seed) if N == cfg.N else default_g(seed, N)
        ctx = cfg.context(g) if N == cfg.N else EvalContext(g=g, D=cfg.D, N=N)
        for scheme in (Scheme((1, 2, 1, 2)), Scheme((1, 2, 1), (2,))):
            build = lambda b, s=scheme: build_genHM(s, slot_vars(s), b, label=f"dkp{signature_text(s.signature)}")
            base, _ = choose_base(build, g, N, random.Random(f"dkp:{seed}:{scheme}"))
            rel = build(base)
            params = {"seed": seed, "scheme": [list(getattr(scheme, s)) for s in ("Lp", "Lm", "Rp", "Rm")],
                      "N": N, "rhs_terms": len(rel.rhs), "g": _g_params(g)}
            rec = relation_record("fourpoint", rel, ctx, params)
            if rel.rhs:
                rec["passed"] = False
                rec["first_nonzero_monomial"] = "reduction has RHS terms"
            rec["relation_label"] = "reduction/" + rel.label
            out.append(rec)
    return out


def _task_mutations(cfg: SuiteConfig, kind: str) -> List[dict]:
    """Each mutated canonical relation, claimed as an identity; a failed record
    means the mutation was caught, with the configuration that caught it."""
    spec = fourpoint_spec(kind)
    prepared = []
    for seed, ind in MUTATION_CONFIGS:
        g = default_g(seed, MUTATION_N)
        base, _ = choose_base(lambda b: build_from_spec(spec, ind, b), g, MUTATION_N, random.Random(seed))
        prepared.append((seed, ind, g, base))
    out = []
    for i, (cat, e) in enumerate(mutation_edits(spec)):
        mutated = apply_edit(spec, e, "mutated")
        rec = None
        for seed, ind, g, base in prepared:
            ctx = EvalContext(g=g, D=MUTATION_D, N=MUTATION_N)
            rel = build_from_spec(mutated, ind, base)
            params = {"seed": seed, "indices": list(ind), "N": MUTATION_N, "category": cat,
                      "mutation": e.describe(spec), "g": _g_params(g)}
            rec = relation_record("fourpoint", rel, ctx, params, emendation="mutation")
            if not rec["residual_zero"]:
                break
        rec["relation_label"] = f"{kind}/mutation/{i:02d}"
        out.append(rec)
    return out


def _task_twopoint(cfg: SuiteConfig, label: str, seed: int) -> List[dict]:
    N = cfg.N
    g = cfg.g_for(seed)
    ctx = cfg.context(g)
    k = 2 if uses_beta(label) else 1
    # a second index always names a component distinct from the first
    pats = [(a, b) for a in range(1, N + 1) for b in range(1, N + 1) if a != b] if k == 2 \
        else [(a,) for a in range(1, N + 1)]
    if not pats:
        return [make_record("twopoint", label, {"seed": seed, "N": N}, True, first="skipped: needs N >= 2")]
    ind = pats[seed % len(pats)]
    variants = two_point_variants(label)
    reference = variants[-1]
    rng = random.Random(f"twopoint:{label}:{seed}")
    base, _ = choose_base(lambda b: build_two_point(label, ind, b, variant=reference), g, N, rng)
    printed = catalog.TWO_POINT[label]
    out = []
    for v in _variants_to_run(variants, cfg.emendations):
        rel = build_two_point(label, ind, base, variant=v)
        flagged = v == "printed" and len(variants) > 1
        params = {"seed": seed, "indices": list(ind), "vars": ["a", "b"], "N": N, "variant": v,
                  "suspected": label in SUSPECTED, "g": _g_params(g)}
        out.append(relation_record("twopoint", rel, ctx, params, _emendation_text(label, v, printed), flagged))
    return out


def _task_one_component(cfg: SuiteConfig) -> List[dict]:
    """N = 1 instances of the family-A equations against the one-component forms."""
    out = []
    base = TauArgument.make((0,), (1,))
    for short, long in (("eq1-1a", "eq1-1"), ("eq1-2a", "eq1-2")):
        r_short = build_two_point(short, (1,), base)
        r_long = build_from_spec(ONE_COMPONENT[long], (1, 1, 1, 1), base)
        same = same_terms(r_short, r_long, up_to_factor=False) is not None
        out.append(_bool_record("twopoint", f"reduction/{short}=={long}", {"N": 1}, same,
                                "term structures differ"))
        for seed in cfg.seeds:
            g = default_g(seed, 1)
            ctx = EvalContext(g=g, D=cfg.D, N=1)
            b, _ = choose_base(lambda bb: build_from_spec(ONE_COMPONENT[long], (1, 1, 1, 1), bb), g, 1,
                               random.Random(f"one:{long}:{seed}"))
            rel = build_from_spec(ONE_COMPONENT[long], (1, 1, 1, 1), b)
            out.append(relation_record("twopoint", rel, ctx, {"seed": seed, "N": 1, "g": _g_params(g)}))
    return out


def _task_classify(cfg: SuiteConfig, M: int) -> List[dict]:
    sigs = classify_schemes(M, intertwining=True, mod_symmetry=True)
    params = {"M": M, "intertwining": True, "mod_symmetry": True,
              "signatures": [signature_text(s) for s in sigs]}
    if M == 3:
        ok = not sigs
    elif M == 4:
        ok = sorted(sigs) == sorted(EXPECTED_M4)
    else:
        ok = True
    return [_bool_record("classify", f"M={M}", params, ok, "unexpected signature list")]


def _task_equivalence(cfg: SuiteConfig, ind: Tuple[int, ...]) -> List[dict]:
    out = []
    params = {"indices": list(ind)}
    out.append(_bool_record("equivalence", "(2,1|1,0)~(3,0|0,1) documented transform", params,
                            equivalence_2110_3001(ind), "no match"))
    for a, b in DOCUMENTED_PAIRS:
        res = scheme_equivalence(a, b, ind)
        out.append(_bool_record("equivalence", f"{signature_text(a)}~{signature_text(b)}",
                                dict(params, map=res.describe()), res.equivalent, "no term map found"))
    col = collapse_to_canonical(EXPECTED_M4, ind)
    missing = [signature_text(s) for s, c in col.items() if c is None]
    out.append(_bool_record("equivalence", "collapse M=4 onto canonical",
                            dict(params, collapse={signature_text(s): signature_text(c) if c else None
                                                   for s, c in col.items()}),
                            not missing, f"unmatched: {missing}"))
    return out


def _task_operator(cfg: SuiteConfig, suite: str, name: str, args: tuple) -> List[dict]:
    if suite == "algebra":
        if name == "anticommutators":
            (n,) = args
            return [_value_record(suite, f"anticommutators/N={n}", {"N": n, "window": [-4, 4]},
                                  checks.algebra_check(n))]
        if name == "commutators":
            v, count = checks.commutator_check(cfg.N)
            return [_value_record(suite, "commutators", {"N": cfg.N, "window": [-8, 8], "probes": count,
                                                         "k": [-3, -2, -1, 1, 2, 3]}, v)]
        return [_value_record(suite, "charge_eigenvalues", {"N": cfg.N, "window": [-8, 8]},
                              checks.charge_eigen_check(cfg.N))]
    if suite == "identity":
        if name == "quartic_control":
            return [_value_record(suite, "quartic_control", {"N": 1, "window": [-2, 2]},
                                  checks.quartic_control(), expected="nonzero")]
        (s,) = args
        if name == "full_basis":
            return [_value_record(suite, "full_basis", {"N": 1, "window": [-2, 2], "seed": s, "elements": 10},
                                  checks.identity_check_full(1, seed=s * 10))]
        v, count = checks.identity_check_probes(cfg.N, seed=s * 10)
        return [_value_record(suite, "probe_pairs", {"N": cfg.N, "window": [-3, 3], "seed": s, "elements": 10,
                                                     "pairs": count}, v)]
    if suite == "bosonization":
        if name == "rules":
            (n,) = args
            return [_value_record(suite, f"rules/N={n}", {"N": n, "bound": 4, "max_charge": 2},
                                  checks.bosonization_check(n))]
        n = min(cfg.N, 2)
        return [_bool_record(suite, "sign_factors", {"N": n}, checks.bosonization_sign_check(n), "sign mismatch")]
    if suite == "tau":
        if name == "vacuum":
            return [_bool_record(suite, "vacuum", {"N": cfg.N, "D": cfg.D},
                                 checks.vacuum_tau_check(cfg.N, cfg.D), "tau differs from delta", order=cfg.D)]
        D = max(8, cfg.D)
        plus = checks.two_point_tau(D, 1)
        minus = checks.two_point_tau(D, -1)
        geo = checks.geometric(D)
        out = []
        for lbl, val, want, flagged in (
                ("two_point/+[d] vs commutator oracle", plus, checks.bch_two_point_oracle(D, 1), False),
                ("two_point/-[d] vs 1/(1-ad)", minus, geo, False),
                ("two_point/+[d] vs 1/(1-ad)", plus, geo, True)):
            diff = val - want
            out.append(make_record(suite, lbl, {"N": 1, "D": D, "value": val.to_text()}, diff.is_zero(),
                                   order=D, first=series_first_text(diff), flagged=flagged))
        return out
    raise KeyError((suite, name))


def run_task(cfg: SuiteConfig, task: Task) -> List[dict]:
    suite, name, args = task
    t0 = time.perf_counter()
    try:
        if suite == "fourpoint":
            if name == "reductions":
                recs = _task_reductions(cfg)
            elif name == "mutations":
                recs = _task_mutations(cfg, *args)
            else:
                recs = _task_fourpoint(cfg, name, *args)
        elif suite == "twopoint":
            recs = _task_one_component(cfg) if name == "one_component" else _task_twopoint(cfg, name, *args)
        elif suite == "classify":
            recs = _task_classify(cfg, *args)
        elif suite == "equivalence":
            recs = _task_equivalence(cfg, *args)
        else:
            recs = _task_operator(cfg, suite, name, args)
    except Exception as e:  # surfaced in the report, not swallowed
        recs = [make_record(suite, name, {"args": [str(a) for a in args]}, False,
                            error=f"{type(e).__name__}: {e}")]
    if cfg.record_timings:
        ms = int((time.perf_counter() - t0) * 1000)
        for r in recs:
            r["runtime_ms"] = ms
    return recs


def _run_one(arg):
    cfg, task = arg
    return run_task(cfg, task)


def record_sort_key(r: dict):
    return (r["suite"], r["relation_label"], json.dumps(r["params"], sort_keys=True), r["emendation_used"])


def summarize(records: Sequence[dict]) -> dict:
    failed = [r for r in records if not r["passed"] and not r["flagged"]]
    flagged = [r for r in records if not r["passed"] and r["flagged"]]

    def brief(r):
        return {"suite": r["suite"], "relation_label": r["relation_label"],
                "first_nonzero_monomial": r["first_nonzero_monomial"], "error": r.get("error"),
                "emendation_used": r["emendation_used"]}

    return {"total": len(records), "passed": sum(r["passed"] for r in records),
            "failed": len(failed), "flagged_failed": len(flagged),
            "failures": [brief(r) for r in failed], "flagged": [brief(r) for r in flagged]}


def run_suite(cfg: SuiteConfig, progress: Optional[Callable[[Task], None]] = None) -> dict:
    cfg.validate()
    tasks = plan(cfg)
    records: List[dict] = []
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as ex:
            for t, recs in zip(tasks, ex.map(_run_one, [(cfg, t) for t in tasks])):
                if progress:
                    progress(t)
                records.extend(recs)
    else:
        for t in tasks:
            if progress:
                progress(t)
            records.extend(run_task(cfg, t))
    records.sort(key=record_sort_key)
    return {"schema_version": REPORT_VERSION, "engine_version": __version__,
            "config": cfg.to_dict(), "records": records, "summary": summarize(records)}


def exit_code(report: dict) -> int:
    return 0 if report["summary"]["failed"] == 0 else 1


def emit_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=1) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"report v{report['schema_version']} engine {report['engine_version']}",
             "config: " + json.dumps({k: v for k, v in report["config"].items() if k != "g_spec"}, sort_keys=True)]
    for r in report["records"]:
        tag = "PASS" if r["passed"] else ("FLAG" if r["flagged"] else "FAIL")
        p = r["params"]
        bits = [f"{k}={p[k]}" for k in ("seed", "indices", "N", "variant") if k in p]
        if "base" in p:
            bits.append(f"n={p['base']['n']} nbar={p['base']['nbar']}")
        line = f"[{tag}] {r['suite']:<12} {r['relation_label']:<28} {' '.join(bits)}"
        if r["emendation_used"] not in ("none", "printed"):
            line += f" ({r['emendation_used']})"
        if not r["passed"]:
            line += f" :: {r.get('error') or r['first_nonzero_monomial']}"
        lines.append(line)
    s = report["summary"]
    lines.append(f"total: {s['total']} passed: {s['passed']} flagged: {s['flagged_failed']}")
    lines.append(f"failed: {s['failed']}")
    return "\n".join(lines) + "\n"
