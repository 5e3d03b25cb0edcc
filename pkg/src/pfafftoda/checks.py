"""Operator-level checks: fermion algebra, current commutators, the
Clifford bilinear identity, bosonization and closed-form tau values."""
from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from .clifford import bilinear_identity_residual, g_random, quartic_map
from .currents import (BOSONIZATION_RULES, MiwaShiftSpec, apply_J,
                       bosonization_residual, bosonization_sides, commutator_residual)
from .fock import (PSI, PSI_STAR, ModeId, StateVector, Window, apply_fermion,
                   charge_of, eps_component, vacuum_ket)
from .series import TruncSeries, ts_exp
from .taueval import EvalContext, TauArgument, tau


def random_basis_states(window: Window, count: int, rng: random.Random, spread: int = 2) -> List[StateVector]:
    """Particle-hole excitations of the sea confined to [-spread, spread)."""
    one = TruncSeries.const(1, 0)
    out = []
    for _ in range(count):
        b = window.sea
        for g in range(1, window.N + 1):
            for j in range(-spread, spread):
                if rng.random() < 0.5:
                    b ^= 1 << window.index(ModeId(g, j))
        out.append(StateVector(window, {b: one}))
    return out


def anticommutator_residual(window: Window, probes: Sequence[StateVector]) -> Fraction:
    """Max-norm of {psi_a, psi*_b} - delta_ab, {psi_a, psi_b}, {psi*_a, psi*_b}
    over every ordered mode pair and every probe."""
    worst = Fraction(0)
    modes = window.modes()
    for p in probes:
        for a in modes:
            for b in modes:
                for k1, k2, central in ((PSI, PSI_STAR, a == b), (PSI, PSI, False), (PSI_STAR, PSI_STAR, False)):
                    r = apply_fermion(k1, a, apply_fermion(k2, b, p)) + apply_fermion(k2, b, apply_fermion(k1, a, p))
                    if central:
                        r = r - p
                    worst = max(worst, r.max_abs())
    return worst


def algebra_check(N: int, seed: int = 0, n_probes: int = 6) -> Fraction:
    w = Window(N, -4, 4)
    probes = random_basis_states(w, n_probes, random.Random(seed), spread=4)
    return anticommutator_residual(w, probes)


def commutator_check(N: int = 2, n_probes: int = 100, seed: int = 0,
                     ks: Sequence[int] = (-3, -2, -1, 1, 2, 3)) -> Tuple[Fraction, int]:
    """[J_k^g, J_l^d] = k delta_gd delta_{k,-l} on interior probes; returns
    (worst residual, number of probes)."""
    w = Window(N, -8, 8)
    probes = random_basis_states(w, n_probes, random.Random(seed), spread=2)
    worst = Fraction(0)
    for g, d in itertools.product(range(1, N + 1), repeat=2):
        for k, l in itertools.product(ks, repeat=2):
            margin = 6 - abs(k) - abs(l)
            worst = max(worst, commutator_residual(g, d, k, l, probes, margin=max(margin, 0)))
    return worst, len(probes)


def charge_eigen_check(N: int = 2, n_probes: int = 100, seed: int = 0) -> Fraction:
    """J_0^g acts on basis states as the charge n_g (positive and negative charges)."""
    w = Window(N, -8, 8)
    worst = Fraction(0)
    probes = random_basis_states(w, n_probes, random.Random(seed), spread=3)
    probes += [vacuum_ket(n, w) for n in itertools.product(range(-2, 3), repeat=N)]
    for p in probes:
        (b,) = p.terms
        q = charge_of(w, b)
        for g in range(1, N + 1):
            worst = max(worst, (apply_J(g, 0, p) - p.scale(q[g - 1])).max_abs())
    return worst


def identity_check_full(N: int = 1, n_elements: int = 10, seed: int = 0) -> Fraction:
    w = Window(N, -2, 2)
    worst = Fraction(0)
    for s in range(n_elements):
        worst = max(worst, bilinear_identity_residual(g_random(seed + s, w, 4), w, "full"))
    return worst


def identity_check_probes(N: int = 2, n_elements: int = 10, pairs_per_element: int = 50,
                          seed: int = 0) -> Tuple[Fraction, int]:
    w = Window(N, -3, 3)
    rng = random.Random(seed)
    worst, count = Fraction(0), 0
    for s in range(n_elements):
        g = g_random(seed + s, w, 4)
        us = random_basis_states(w, pairs_per_element, rng, spread=3)
        vs = random_basis_states(w, pairs_per_element, rng, spread=3)
        worst = max(worst, bilinear_identity_residual(g, w, list(zip(us, vs))))
        count += len(us)
    return worst, count


def quartic_control() -> Fraction:
    w = Window(1, -2, 2)
    return bilinear_identity_residual(quartic_map(w), w, "full")


def bosonization_probes(n: Sequence[int], w: Window) -> List[StateVector]:
    """Charged vacua around n dressed with a few current excitations."""
    out = []
    N = len(n)
    for dn in itertools.product((-1, 0, 1), repeat=N):
        c = tuple(a + b for a, b in zip(n, dn))
        v = vacuum_ket(c, w)
        for g in range(1, N + 1):
            v = v + apply_J(g, -1, v) + apply_J(g, -2, apply_J(g, -1, v))
        out.append(v)
    return out


def bosonization_check(N: int, bound: int = 4, charge: int = 2) -> Fraction:
    w = Window(N, -(charge + bound + 4), charge + bound + 4)
    worst = Fraction(0)
    for n in itertools.product(range(-charge, charge + 1), repeat=N):
        probes = bosonization_probes(n, w)
        for rule in BOSONIZATION_RULES:
            for g in range(1, N + 1):
                worst = max(worst, bosonization_residual(rule, n, g, bound, probes))
    return worst


def bosonization_sign_check(N: int = 2, bound: int = 3, charge: int = 2) -> bool:
    """The overall sign of every rule is (-1)^(n_{g+1} + ... + n_N): with that
    factor divided back out, each nonzero fermion matrix element equals the
    bare vertex coefficient times the independently computed sign, and the
    sign is not identically +1 over the tested charges."""
    w = Window(N, -(charge + bound + 4), charge + bound + 4)
    saw_minus = False
    for n in itertools.product(range(-charge, charge + 1), repeat=N):
        probes = bosonization_probes(n, w)
        for rule in BOSONIZATION_RULES:
            for g in range(1, N + 1):
                expected = 1
                for x in n[g:]:
                    expected = -expected if x % 2 else expected
                used = eps_component(g, n)
                seen = False
                for p in probes:
                    for lhs, rhs in bosonization_sides(rule, n, g, bound, p).values():
                        bare = rhs * used
                        if lhs != expected * bare:
                            return False
                        seen = seen or lhs != 0
                if not seen:
                    return False
                saw_minus = saw_minus or expected == -1
    return saw_minus or N == 1


def vacuum_tau_check(N: int = 2, D: int = 5, charge: int = 2) -> bool:
    """g = 1 and no tbar shifts: tau = 1 if n = -nbar else 0, for any t shifts."""
    ctx = EvalContext(D=D, N=N)
    shifts = [MiwaShiftSpec(1, 1, "a"), MiwaShiftSpec(-1, N, "b")]
    for n in itertools.product(range(-charge, charge + 1), repeat=N):
        for nb in itertools.product(range(-charge, charge + 1), repeat=N):
            val = tau(TauArgument.make(n, nb, shifts), ctx)
            want = TruncSeries.const(1 if tuple(-x for x in nb) == tuple(n) else 0, D)
            if val != want:
                return False
    return True


def bch_two_point_oracle(D: int, sign_tbar: int) -> TruncSeries:
    """exp(-sum_k k t_k tbar_k) with t = [a], tbar = sign * [d]: the vacuum
    expectation after commuting exp(J(t)) past exp(-Jbar(tbar)) using
    [J_k, J_{-k}] = k."""
    x = TruncSeries.var("a", D) * TruncSeries.var("d", D)
    s = TruncSeries.zero(D)
    for k in range(1, D // 2 + 1):
        s = s + (x ** k).scale(Fraction(sign_tbar, k))
    return ts_exp(-s)


def two_point_tau(D: int, sign_tbar: int, N: int = 1, component: int = 1) -> TruncSeries:
    arg = TauArgument.make(tuple([0] * N), tuple([0] * N), [MiwaShiftSpec(1, component, "a")],
                           [MiwaShiftSpec(sign_tbar, component, "d")])
    return tau(arg, EvalContext(D=D, N=N))


def geometric(D: int) -> TruncSeries:
    """1 / (1 - a d) through degree D."""
    x = TruncSeries.var("a", D) * TruncSeries.var("d", D)
    out = TruncSeries.const(1, D)
    p = TruncSeries.const(1, D)
    for _ in range(D // 2):
        p = p * x
        out = out + p
    return out
