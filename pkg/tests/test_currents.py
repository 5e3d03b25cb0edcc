import random

import pytest

from pfafftoda.checks import (bosonization_check, bosonization_sign_check, charge_eigen_check,
                              commutator_check, random_basis_states)
from pfafftoda.currents import commutator_residual
from pfafftoda.fock import Window


def test_commutators_on_interior_probes():
    worst, count = commutator_check(2, n_probes=20)
    assert worst == 0 and count == 20


def test_charge_operator():
    assert charge_eigen_check(2, n_probes=20) == 0


def test_probe_near_edge_is_rejected():
    w = Window(1, -3, 3)
    probes = random_basis_states(w, 1, random.Random(0), spread=3)
    with pytest.raises(ValueError):
        commutator_residual(1, 1, 2, -2, probes)


@pytest.mark.parametrize("N", [1, 2])
def test_bosonization(N):
    assert bosonization_check(N, bound=4, charge=1) == 0


def test_bosonization_signs():
    assert bosonization_sign_check(2, bound=2, charge=1)
