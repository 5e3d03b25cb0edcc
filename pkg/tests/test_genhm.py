from hypothesis import given, strategies as st

from pfafftoda.hirota.equivalence import (DOCUMENTED_PAIRS, collapse_to_canonical,
                                          equivalence_2110_3001, scheme_equivalence)
from pfafftoda.hirota.genhm import (Scheme, build_genHM, classify_schemes, signature_parity_ok,
                                    slot_vars, symmetry_orbit)
from pfafftoda.hirota.relation import is_symbolically_trivial
from pfafftoda.suites import EXPECTED_M4
from pfafftoda.taueval import TauArgument


def test_no_three_point_schemes():
    assert classify_schemes(3, intertwining=True, mod_symmetry=True) == []


def test_eight_four_point_schemes():
    assert sorted(classify_schemes(4, intertwining=True, mod_symmetry=True)) == sorted(EXPECTED_M4)


@given(st.tuples(*[st.integers(0, 3)] * 4))
def test_symmetry_preserves_parity(sig):
    for s in symmetry_orbit(sig):
        assert signature_parity_ok(s) == signature_parity_ok(sig)
        assert sum(s) == sum(sig)


def test_two_point_schemes_are_trivial():
    base = TauArgument.make((0, 0), (1, 0))
    for sig in classify_schemes(2):
        it = iter((1, 2))
        s = Scheme(*[tuple(next(it) for _ in range(k)) for k in sig])
        assert is_symbolically_trivial(build_genHM(s, slot_vars(s), base))


def test_empty_barred_side_gives_no_rhs():
    s = Scheme((1, 2, 1, 2))
    rel = build_genHM(s, slot_vars(s), TauArgument.make((0, 0), (1, 0)))
    assert rel.rhs == [] and len(rel.lhs) == 4


def test_documented_equivalences():
    for ind in ((1, 2, 3, 4), (1, 1, 2, 2), (2, 1, 1, 1)):
        assert equivalence_2110_3001(ind)
        for a, b in DOCUMENTED_PAIRS:
            assert scheme_equivalence(a, b, ind).equivalent
        assert None not in collapse_to_canonical(EXPECTED_M4, ind).values()
