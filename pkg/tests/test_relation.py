import random

import pytest
from hypothesis import given, settings, strategies as st

from pfafftoda.hirota.genhm import Scheme, build_genHM, slot_vars
from pfafftoda.hirota.relation import (LHS, RHS, Coeff, Relation, RelationTerm, clear_denominators,
                                       export_records, is_symbolically_trivial, residual, same_terms)
from pfafftoda.hirota.search import choose_base, default_g
from pfafftoda.taueval import EvalContext, TauArgument

BASE = TauArgument.make((0, 0), (1, 0))


def test_coeff_difference_is_antisymmetric():
    assert Coeff.diff("a", "b").same_value(-Coeff.diff("b", "a"))
    assert Coeff.inv_diff("a", "b").same_value(-Coeff.inv_diff("b", "a"))


def test_clearing_removes_denominators():
    s = Scheme((1, 2, 1), (), (2,), ())
    rel = build_genHM(s, slot_vars(s), BASE)
    assert not rel.is_cleared()
    assert clear_denominators(rel).is_cleared()


def test_residual_requires_cleared_relation():
    s = Scheme((1, 2, 1), (), (2,), ())
    rel = build_genHM(s, slot_vars(s), BASE)
    with pytest.raises(ValueError):
        residual(rel, EvalContext(N=2))


def test_cancelling_terms_are_trivial():
    t = RelationTerm(LHS, Coeff.one(), BASE, BASE)
    u = RelationTerm(RHS, Coeff.one(), BASE, BASE)
    assert is_symbolically_trivial(Relation((t, u), BASE, "x"))


def test_same_terms_reports_a_constant_ratio():
    s = Scheme((1, 2, 1), (), (2,), ())
    rel = build_genHM(s, slot_vars(s), BASE)
    neg = Relation(tuple(RelationTerm(t.side, -t.coeff, t.left, t.right) for t in rel.terms), BASE, "neg")
    num, den = same_terms(rel, neg)
    assert num == -den


def test_export_records_have_schema_fields():
    s = Scheme((1, 2, 1), (), (2,), ())
    recs = export_records(build_genHM(s, slot_vars(s), BASE))
    assert len(recs) == 4
    assert {"label", "side", "sign_coeff", "poly_coeff", "den_factors", "left_arg", "right_arg"} <= set(recs[0])


SCHEMES = [Scheme((1, 2, 1), (), (2,), ()), Scheme((1, 2, 2), (), (), (1,)),
           Scheme((1, 2), (), (2, 1), ()), Scheme((1, 1), (), (2,), (2,)),
           Scheme((1, 2), (1,), (2,), ())]


@settings(max_examples=6, deadline=None)
@given(st.sampled_from(SCHEMES), st.integers(0, 50))
def test_genhm_residual_vanishes(scheme, seed):
    g = default_g(seed, 2)
    build = lambda b: build_genHM(scheme, slot_vars(scheme), b)
    base, nonzero = choose_base(build, g, 2, random.Random(seed))
    assert nonzero >= 2
    assert residual(clear_denominators(build(base)), EvalContext(g=g, D=4, N=2)).is_zero()


def test_wrong_sign_breaks_genhm():
    scheme = SCHEMES[0]
    g = default_g(1, 2)
    build = lambda b: build_genHM(scheme, slot_vars(scheme), b)
    base, _ = choose_base(build, g, 2, random.Random(1))
    rel = build(base)
    terms = list(rel.terms)
    terms[0] = RelationTerm(terms[0].side, -terms[0].coeff, terms[0].left, terms[0].right)
    bad = Relation(tuple(terms), base, "bad")
    assert not residual(clear_denominators(bad), EvalContext(g=g, D=4, N=2)).is_zero()
