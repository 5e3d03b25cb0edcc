import random
from collections import Counter

import pytest

from pfafftoda.hirota.catalog import (EMENDATIONS, FAMILY_SOURCE, MULTI_TOKEN_CORRECTIONS, ONE_COMPONENT,
                                      SUSPECTED, TWO_POINT, TWO_POINT_LABELS, build_two_point,
                                      fourpoint_spec, two_point_variants, uses_beta)
from pfafftoda.hirota.dsl import apply_edit, build_from_spec, mutation_edits
from pfafftoda.hirota.relation import clear_denominators, residual, same_terms
from pfafftoda.hirota.search import choose_base, default_g, search_configs, search_emendations
from pfafftoda.taueval import EvalContext, TauArgument


def test_catalog_shape():
    assert len(TWO_POINT_LABELS) == 32
    assert Counter(s.family for s in TWO_POINT.values()) == {f: 8 for f in FAMILY_SOURCE}
    assert set(EMENDATIONS) | set(MULTI_TOKEN_CORRECTIONS) == set(SUSPECTED)


def _holds(label, variant, seed):
    g = default_g(seed, 2)
    ind = (1, 2) if uses_beta(label) else (1,)
    build = lambda b: build_two_point(label, ind, b, variant=variant)
    base, _ = choose_base(build, g, 2, random.Random(seed))
    return residual(clear_denominators(build(base)), EvalContext(g=g, D=4, N=2)).is_zero()


@pytest.mark.parametrize("label", [l for l in TWO_POINT_LABELS if l not in SUSPECTED])
def test_unflagged_two_point_relations(label):
    assert _holds(label, "printed", 0)


@pytest.mark.parametrize("label", SUSPECTED)
def test_suspected_labels(label):
    assert not _holds(label, "printed", 1)
    assert _holds(label, two_point_variants(label)[-1], 1)


@pytest.mark.parametrize("label", sorted(EMENDATIONS))
def test_single_token_emendation_is_unique(label):
    spec = TWO_POINT[label]
    assert search_emendations(spec, search_configs(spec, seeds=(0, 1))) == [EMENDATIONS[label]]


def test_one_component_forms_match():
    base = TauArgument.make((0,), (1,))
    for short, long in (("eq1-1a", "eq1-1"), ("eq1-2a", "eq1-2")):
        r1 = build_two_point(short, (1,), base)
        r2 = build_from_spec(ONE_COMPONENT[long], (1, 1, 1, 1), base)
        assert same_terms(r1, r2, up_to_factor=False) is not None


def test_printed_2020_differs_from_corrected():
    assert fourpoint_spec("2020", "printed") != fourpoint_spec("2020")


def test_mutation_edits_apply():
    spec = fourpoint_spec("3010")
    muts = mutation_edits(spec)
    assert {c for c, _ in muts} == {"sign", "delta", "charge"}
    for _, e in muts:
        assert apply_edit(spec, e, "mutated") != spec
