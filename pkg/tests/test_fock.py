import random

import pytest
from hypothesis import given, strategies as st

from pfafftoda.checks import anticommutator_residual, random_basis_states
from pfafftoda.fock import (PSI, ModeId, Window, apply_fermion, charge_of, eps_component,
                            eps_pair, pair, vacuum_bra, vacuum_ket)


@pytest.mark.parametrize("N", [1, 2, 3])
def test_anticommutators(N):
    w = Window(N, -4, 4)
    probes = random_basis_states(w, 4, random.Random(N), spread=4)
    assert anticommutator_residual(w, probes) == 0


@given(st.integers(-3, 3), st.integers(-3, 3))
def test_charged_vacua(n1, n2):
    w = Window(2, -5, 5)
    ket = vacuum_ket((n1, n2), w)
    (b,) = ket.terms
    assert charge_of(w, b) == (n1, n2)
    assert pair(vacuum_bra((n1, n2), w), ket).constant_term() == 1


def test_psi_squares_to_zero_and_sign_string():
    w = Window(2, -2, 2)
    v = vacuum_ket((0, 0), w)
    m = ModeId(2, 0)
    assert apply_fermion(PSI, m, apply_fermion(PSI, m, v)).is_zero()
    # filling (2, 0) passes the two occupied modes of component 1 and one of component 2
    (c,) = apply_fermion(PSI, m, v).terms.values()
    lower = 2 + 2
    assert c.constant_term() == (-1) ** lower


def test_eps_factors():
    assert eps_component(1, (0, 1)) == -1
    assert eps_component(2, (5, 1)) == 1
    assert eps_pair(1, 1, (3, 3)) == 1
    assert eps_pair(1, 2, (0, 1)) == -1
    assert eps_pair(2, 1, (0, 1)) == 1


def test_window_rejects_bad_bounds():
    with pytest.raises(ValueError):
        Window(1, 0, 3)
