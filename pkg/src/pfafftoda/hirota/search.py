"""Seeded sampling of Clifford elements and base arguments, the
single-token emendation search, and mutation scans."""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from ..clifford import CliffordElement, g_random
from ..fock import Window
from ..taueval import EvalContext, TauArgument
from .dsl import Edit, RelationSpec, apply_edit, build_from_spec, candidate_edits, mutation_edits
from .relation import (Relation, clear_denominators, is_symbolically_trivial,
                       residual, term_values)

G_FACTORS = 14
G_RADIUS = 2
PROBE_ORDER = 2

# (seed, indices) pairs under which every single sign, delta or charge
# mutation of each canonical 4-point relation shows a nonzero residual
MUTATION_CONFIGS = ((0, (1, 2, 2, 1)), (1, (1, 1, 2, 2)), (2, (1, 1, 1, 1)), (3, (2, 1, 1, 2)),
                    (4, (1, 2, 1, 2)), (5, (2, 2, 1, 1)), (6, (1, 1, 2, 1)), (7, (2, 2, 2, 1)))


def default_g(seed: int, N: int, n_factors: int = G_FACTORS) -> CliffordElement:
    """Seeded mixed-kind element on modes [-2, 2); enough factors that most
    charge sectors a relation touches are reachable."""
    return g_random(seed, Window(N, -G_RADIUS, G_RADIUS), n_factors)


def candidate_bases(N: int) -> List[TauArgument]:
    """n in [-1, 1]^N with nbar = -n + d, d in [-2, 2]^N (|nbar| <= 2 enforced
    for N >= 3 by narrowing d)."""
    dr = range(-2, 3) if N <= 2 else range(-1, 2)
    out = []
    for n in itertools.product(range(-1, 2), repeat=N):
        for d in itertools.product(dr, repeat=N):
            nb = tuple(d[i] - n[i] for i in range(N))
            if max(abs(x) for x in nb) <= 2:
                out.append(TauArgument.make(n, nb))
    return out


def nonzero_terms(rel: Relation, g: CliffordElement, N: int, D: int = PROBE_ORDER) -> int:
    ctx = EvalContext(g=g, D=D, N=N)
    return sum(not v.is_zero() for v in term_values(clear_denominators(rel), ctx))


def choose_base(build: Callable[[TauArgument], Relation], g: CliffordElement, N: int,
                rng: random.Random) -> Tuple[TauArgument, int]:
    """A base maximizing the number of nonvanishing terms (seeded tie-break)."""
    scored = [(nonzero_terms(build(b), g, N), b) for b in candidate_bases(N)]
    best = max(s for s, _ in scored)
    pool = [b for s, b in scored if s == best]
    return rng.choice(pool), best


@dataclass(frozen=True)
class SearchConfig:
    g: CliffordElement
    N: int
    indices: Tuple[int, ...]
    bases: Tuple[TauArgument, ...]
    D: int = 3


def search_configs(spec: RelationSpec, seeds: Sequence[int] = (0, 1, 2), N: int = 2,
                   per_config: int = 4, D: int = 3) -> List[SearchConfig]:
    """For each seed: g, alternating index order, and the bases where the
    spec has the most nonvanishing terms."""
    out = []
    for i, seed in enumerate(seeds):
        g = default_g(seed, N)
        ind = (1, 2, 1, 1) if i % 2 == 0 else (2, 1, 1, 1)
        scored = [(nonzero_terms(build_from_spec(spec, ind, b), g, N), b) for b in candidate_bases(N)]
        scored.sort(key=lambda x: -x[0])
        out.append(SearchConfig(g, N, ind, tuple(b for _, b in scored[:per_config]), D))
    return out


def spec_holds(spec: RelationSpec, configs: Sequence[SearchConfig]) -> bool:
    """Zero residual on every configuration, and not an identity 0 = 0."""
    for c in configs:
        ctx = EvalContext(g=c.g, D=c.D, N=c.N)
        for b in c.bases:
            try:
                rel = build_from_spec(spec, c.indices, b)
            except ValueError:
                return False
            if is_symbolically_trivial(rel):
                return False
            if not residual(clear_denominators(rel), ctx).is_zero():
                return False
    return True


def search_emendations(spec: RelationSpec, configs: Optional[Sequence[SearchConfig]] = None) -> List[Edit]:
    """Every single-token edit under which the relation holds."""
    configs = configs if configs is not None else search_configs(spec)
    hits = []
    for e in candidate_edits(spec):
        try:
            s2 = apply_edit(spec, e)
        except ValueError:
            continue
        if spec_holds(s2, configs):
            hits.append(e)
    return hits


@dataclass(frozen=True)
class MutationOutcome:
    category: str
    description: str
    detected: bool
    config: str


def mutation_scan(spec: RelationSpec, configs: Sequence[Tuple[int, Tuple[int, ...]]] = MUTATION_CONFIGS, N: int = 2,
                  D: int = 3) -> List[MutationOutcome]:
    """Apply each mutation and look for a configuration with nonzero residual.

    ``configs`` are (seed, indices) pairs; the base is chosen for the
    unmutated relation so the comparison is like for like.
    """
    prepared = []
    for seed, ind in configs:
        g = default_g(seed, N)
        base, _ = choose_base(lambda b: build_from_spec(spec, ind, b), g, N, random.Random(seed))
        prepared.append((seed, ind, g, base))
    out = []
    for cat, e in mutation_edits(spec):
        mutated = apply_edit(spec, e, "mutated")
        found = None
        for seed, ind, g, base in prepared:
            ctx = EvalContext(g=g, D=D, N=N)
            r = residual(clear_denominators(build_from_spec(mutated, ind, base)), ctx)
            if not r.is_zero():
                found = f"seed={seed} indices={ind} n={list(base.n)} nbar={list(base.nbar)}"
                break
        out.append(MutationOutcome(cat, e.describe(spec), found is not None, found or ""))
    return out
