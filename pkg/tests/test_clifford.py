from fractions import Fraction

import jsonschema
from hypothesis import given, settings, strategies as st

from pfafftoda.checks import identity_check_full, identity_check_probes, quartic_control
from pfafftoda.clifford import CLIFFORD_SCHEMA, KINDS, CliffordElement, g_random
from pfafftoda.fock import Window


@given(st.integers(0, 10_000), st.integers(1, 6))
def test_records_round_trip(seed, k):
    g = g_random(seed, Window(2, -2, 2), k)
    recs = g.to_records()
    jsonschema.validate(recs, CLIFFORD_SCHEMA)
    assert CliffordElement.from_records(recs) == g


def test_random_elements_cover_all_kinds():
    g = g_random(3, Window(2, -2, 2), 4)
    assert {f.kind for f in g.factors} == set(KINDS)
    assert all(isinstance(f.lam, Fraction) for f in g.factors)


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 1000))
def test_bilinear_identity_full_basis(seed):
    assert identity_check_full(1, n_elements=1, seed=seed) == 0


def test_bilinear_identity_probe_pairs():
    worst, count = identity_check_probes(2, n_elements=2, pairs_per_element=20)
    assert worst == 0 and count == 40


def test_quartic_control_breaks_identity():
    assert quartic_control() != 0
