from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from pfafftoda.checks import bch_two_point_oracle, geometric, two_point_tau, vacuum_tau_check
from pfafftoda.clifford import CliffordElement, QuadFactor, g_random
from pfafftoda.currents import MiwaShiftSpec
from pfafftoda.fock import ModeId, Window
from pfafftoda.series import TruncSeries
from pfafftoda.taueval import EvalContext, TauArgument, stabilization_check, tau, window_bound

D = 6
PTS = ("a", "b", "c")


def h(k: int) -> TruncSeries:
    """Complete homogeneous symmetric polynomial in a, b, c."""
    if k < 0:
        return TruncSeries.zero(D)
    out = TruncSeries.zero(D)
    for i in range(k + 1):
        for j in range(k + 1 - i):
            out = out + TruncSeries.var("a", D, i) * TruncSeries.var("b", D, j) * TruncSeries.var("c", D, k - i - j)
    return out


def schur_hook(p: int, q: int) -> TruncSeries:
    """s_(p+1, 1^q) by Jacobi-Trudi with rows p+1, 1, ..., 1."""
    rows = [p + 1] + [1] * q
    n = len(rows)
    # determinant of [h_{rows_i - i + j}] by permutation expansion
    import itertools
    out = TruncSeries.zero(D)
    for perm in itertools.permutations(range(n)):
        sign = 1
        for i in range(n):
            for j in range(i + 1, n):
                if perm[i] > perm[j]:
                    sign = -sign
        term = TruncSeries.const(sign, D)
        for i in range(n):
            term = term * h(rows[i] - i + perm[i])
        out = out + term
    return out


@settings(max_examples=9, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2))
def test_hook_states_match_schur_oracle(p, q):
    lam = Fraction(3, 2)
    g = CliffordElement((QuadFactor("AA", ModeId(1, p), ModeId(1, -1 - q), lam),))
    arg = TauArgument.make((0,), (0,), [MiwaShiftSpec(1, 1, v) for v in PTS])
    got = tau(arg, EvalContext(g=g, D=D, N=1))
    want = TruncSeries.const(1, D) + schur_hook(p, q).scale(lam * (-1) ** q)
    assert got == want


def test_vacuum_values():
    assert vacuum_tau_check(2, D=4, charge=1)


def test_two_point_matches_commutator_oracle():
    assert two_point_tau(8, 1) == bch_two_point_oracle(8, 1)
    assert two_point_tau(8, -1) == geometric(8)
    assert two_point_tau(8, 1) == TruncSeries.const(1, 8) - TruncSeries.var("a", 8) * TruncSeries.var("d", 8)


def test_odd_parity_vanishes():
    g = g_random(0, Window(2, -2, 2), 6)
    assert tau(TauArgument.make((1, 0), (0, 0)), EvalContext(g=g, D=3, N=2)).is_zero()


@settings(max_examples=5, deadline=None)
@given(st.integers(0, 100))
def test_window_bound_is_stable(seed):
    g = g_random(seed, Window(2, -2, 2), 6)
    ctx = EvalContext(g=g, D=3, N=2)
    arg = TauArgument.make((1, 0), (-1, 0), [MiwaShiftSpec(1, 1, "a")], [MiwaShiftSpec(-1, 2, "b")])
    assert stabilization_check(arg, ctx, window_bound(arg, ctx))


def test_context_rejects_foreign_components():
    g = g_random(0, Window(3, -2, 2), 6)
    if g.max_component() > 2:
        with pytest.raises(ValueError):
            EvalContext(g=g, N=2)
