"""Current modes, exact exponentials of currents, Miwa shifts and the
operator-level checks built on them."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .fock import (PSI, PSI_STAR, ModeId, StateVector, Window, _parity_below,
                   apply_fermion, apply_fermion_left, charge_of, eps_component,
                   pair, unit, vacuum_bra, vacuum_ket, vadd)
from .series import TruncSeries, ts_sum


class WindowWarning(UserWarning):
    pass


def _current_moves(window: Window, gamma: int, k: int, basis: int):
    """Yield (new_basis, sign) for J_k^{(gamma)} with k != 0 on one basis state.

    J_k = sum_j psi_j psi*_{j+k}: a particle at j+k moves to j.
    """
    off = (gamma - 1) * window.width
    lo, hi = window.j_min, window.j_max
    for m in range(max(lo, lo + k), min(hi, hi + k)):
        src = off + m - lo
        if not basis >> src & 1:
            continue
        dst = src - k
        if basis >> dst & 1:
            continue
        s = _parity_below(basis, src)
        b1 = basis ^ (1 << src)
        s ^= _parity_below(b1, dst)
        yield b1 | (1 << dst), s


def apply_J(gamma: int, k: int, v: StateVector) -> StateVector:
    """J_k^{(gamma)} = sum_j :psi_j psi*_{j+k}: restricted to the window."""
    w = v.window
    if not 1 <= gamma <= w.N:
        raise ValueError("component out of range")
    if abs(k) >= w.width:
        warnings.warn(f"|k|={abs(k)} exceeds the window span; J_k is zero here", WindowWarning)
        return StateVector(w, {})
    if k == 0:
        out = {}
        for b, c in v.terms.items():
            q = charge_of(w, b)[gamma - 1]
            if q:
                out[b] = c.scale(q)
        return StateVector._raw(w, out)
    acc: Dict[int, List[TruncSeries]] = {}
    for b, c in v.terms.items():
        for nb, s in _current_moves(w, gamma, k, b):
            acc.setdefault(nb, []).append(-c if s else c)
    return _collect(w, acc)


def _collect(w: Window, acc: Dict[int, List[TruncSeries]]) -> StateVector:
    out = {}
    for b, parts in acc.items():
        s = parts[0] if len(parts) == 1 else ts_sum(parts, min(p.order for p in parts))
        if not s.is_zero():
            out[b] = s
    return StateVector._raw(w, out)


def apply_J_normal_ordered_sum(gamma: int, k: int, v: StateVector) -> StateVector:
    """Reference implementation: the literal mode-by-mode sum of
    :psi_j psi*_{j+k}: with fermion operators; used as a test oracle."""
    w = v.window
    acc = StateVector(w, {})
    for j in range(w.j_min, w.j_max):
        if not w.j_min <= j + k < w.j_max:
            continue
        if k == 0 and j < 0:
            term = -apply_fermion(PSI_STAR, ModeId(gamma, j), apply_fermion(PSI, ModeId(gamma, j), v))
        else:
            term = apply_fermion(PSI, ModeId(gamma, j), apply_fermion(PSI_STAR, ModeId(gamma, j + k), v))
        acc = acc + term
    return acc


@dataclass(frozen=True)
class MiwaShiftSpec:
    """Shift t_gamma -> t_gamma + sign * [eps] with eps = z^{-1} a formal variable.

    ``extended`` also moves the charge n_gamma by ``sign``.
    """
    sign: int
    component: int
    var: str
    extended: bool = False

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")


@dataclass(frozen=True)
class TimeAssignment:
    """Times t_{gamma,k}; ``bar`` selects J_{-k} (the barred flow) over J_{k}."""
    entries: Tuple[Tuple[Tuple[int, int], TruncSeries], ...] = ()
    bar: bool = False

    @classmethod
    def from_map(cls, entries: Mapping[Tuple[int, int], TruncSeries], bar: bool = False):
        clean = tuple(sorted(((gk, c) for gk, c in entries.items() if not c.is_zero()),
                             key=lambda x: x[0]))
        for (g, k), _ in clean:
            if k < 1:
                raise ValueError("time orders start at 1")
        return cls(clean, bar)

    def as_map(self) -> Dict[Tuple[int, int], TruncSeries]:
        return dict(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def __add__(self, other: "TimeAssignment") -> "TimeAssignment":
        if self.bar != other.bar:
            raise ValueError("cannot add barred and unbarred times")
        out = self.as_map()
        for gk, c in other.entries:
            out[gk] = out[gk] + c if gk in out else c
        return TimeAssignment.from_map(out, self.bar)

    def __neg__(self):
        return TimeAssignment(tuple((gk, -c) for gk, c in self.entries), self.bar)

    def transposed(self) -> "TimeAssignment":
        """Same coefficients on the transposed currents (J_k^T = J_{-k})."""
        return TimeAssignment(self.entries, not self.bar)

    def component(self, gamma: int) -> Dict[int, TruncSeries]:
        return {k: c for (g, k), c in self.entries if g == gamma}


def miwa_times(spec: MiwaShiftSpec, D: int, window: Window | None = None,
               bar: bool = False) -> TimeAssignment:
    """t_{gamma,k} = sign * eps^k / k for 1 <= k <= min(D, K_eff)."""
    kmax = D if window is None else min(D, window.width)
    entries = {}
    for k in range(1, kmax + 1):
        entries[(spec.component, k)] = TruncSeries.var(spec.var, D, k).scale(Fraction(spec.sign, k))
    return TimeAssignment.from_map(entries, bar)


def xi_eval(t_gamma: Mapping[int, TruncSeries] | Sequence, z: TruncSeries) -> TruncSeries:
    """xi(t, z) = sum_k t_k z^k; ``t_gamma`` maps k -> t_k (or lists t_1, t_2, ...)."""
    if not isinstance(t_gamma, Mapping):
        t_gamma = {k: c for k, c in enumerate(t_gamma, start=1)}
    acc = TruncSeries.zero(z.order)
    for k, c in sorted(t_gamma.items()):
        if not isinstance(c, TruncSeries):
            c = TruncSeries.const(c, z.order)
        acc = acc + c * (z ** k)
    return acc


def apply_time_operator(t: TimeAssignment, v: StateVector) -> StateVector:
    """X v with X = sum t_{gamma,k} J_{+-k}^{(gamma)}; skips terms that overflow the order."""
    w = v.window
    acc: Dict[int, List[TruncSeries]] = {}
    for (gamma, k), coef in t.entries:
        kk = -k if t.bar else k
        if abs(kk) >= w.width:
            continue
        cval = coef.valuation()
        for b, c in v.terms.items():
            cv = c.valuation()
            if cv + cval > min(c.order, coef.order):
                continue
            p = None
            for nb, s in _current_moves(w, gamma, kk, b):
                if p is None:
                    p = c * coef
                    if p.is_zero():
                        break
                    neg_p = -p
                acc.setdefault(nb, []).append(neg_p if s else p)
    return _collect(w, acc)


def apply_exp_current(t: TimeAssignment, sign: int, v: StateVector) -> StateVector:
    """exp(sign * X) v for X = sum t J; exact when every t has positive valuation."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if t.is_zero() or v.is_zero():
        return v
    for gk, c in t.entries:
        if c.constant_term() != 0:
            raise ValueError(f"time {gk} has a constant term; exact mode needs positive valuation")
    order = max(c.order for c in v.terms.values())
    out = v
    term = v
    steps = 0
    for m in range(1, order + 2):
        term = apply_time_operator(t, term).scale(Fraction(sign, m))
        if term.is_zero():
            break
        out = out + term
        steps = m
    assert steps <= order, "exponential failed to terminate within the truncation order"
    return out


def apply_exp_current_left(t: TimeAssignment, sign: int, bra: StateVector) -> StateVector:
    """The bra ``<u| exp(sign * X)`` as a vector, using J_k^T = J_{-k}."""
    return apply_exp_current(t.transposed(), sign, bra)


def _interior_span(v: StateVector) -> Tuple[int, int] | None:
    """Lowest and highest momenta where v differs from the sea."""
    w = v.window
    sea = w.sea
    lo = hi = None
    for b in v.terms:
        diff = b ^ sea
        idx = 0
        while diff:
            if diff & 1:
                j = w.mode_at(idx).momentum
                lo = j if lo is None else min(lo, j)
                hi = j if hi is None else max(hi, j)
            diff >>= 1
            idx += 1
    if lo is None:
        return None
    return lo, hi


def _require_interior(v: StateVector, distance: int):
    span = _interior_span(v)
    w = v.window
    if span is None:
        lo, hi = -1, 0
    else:
        lo, hi = span
    if lo - distance < w.j_min or hi + distance >= w.j_max:
        raise ValueError(f"probe too close to window boundary (needs distance {distance})")


def commutator_residual(gamma: int, delta: int, k: int, l: int,
                        probes: Iterable[StateVector], margin: int = 0) -> Fraction:
    """Max-norm of ([J_k^g, J_l^d] - k delta_{gd} delta_{k,-l}) on each probe.

    Probes must sit at distance >= |k| + |l| + margin from the window edges.
    """
    worst = Fraction(0)
    central = k if (gamma == delta and k == -l) else 0
    for p in probes:
        _require_interior(p, abs(k) + abs(l) + margin)
        r = (apply_J(gamma, k, apply_J(delta, l, p))
             - apply_J(delta, l, apply_J(gamma, k, p)))
        if central:
            r = r - p.scale(central)
        worst = max(worst, r.max_abs())
    return worst


BOSONIZATION_RULES = ("bra_psi", "bra_psi_star", "ket_psi", "ket_psi_star")


def bosonization_sides(rule: str, n: Sequence[int], gamma: int, bound: int,
                       probe: StateVector, var: str = "w"):
    """Both sides of a bosonization rule, paired with ``probe``.

    Returns ``{j: (lhs, rhs)}`` indexed by fermion momentum j, where lhs is
    the matrix element of psi_j (or psi*_j) and rhs the matching coefficient
    of the vertex-operator side (zero outside the allowed range).  The
    vertex side is expanded in w = z^{-1} (bra rules) or w = z (ket rules).
    """
    if rule not in BOSONIZATION_RULES:
        raise ValueError(f"unknown bosonization rule {rule!r}")
    w = probe.window
    N = w.N
    n = tuple(n)
    probe = StateVector(w, {b: c.with_order(bound) for b, c in probe.terms.items()})
    eps = eps_component(gamma, n)
    order = bound
    e = unit(N, gamma)
    kind = PSI if rule.endswith("_psi") else PSI_STAR
    # flow sign and shifted charge for each rule
    if rule == "bra_psi":
        shifted, flow_sign, leading, step = vadd(n, tuple(-x for x in e)), -1, n[gamma - 1] - 1, -1
    elif rule == "bra_psi_star":
        shifted, flow_sign, leading, step = vadd(n, e), 1, n[gamma - 1], 1
    elif rule == "ket_psi":
        shifted, flow_sign, leading, step = vadd(n, e), 1, n[gamma - 1], 1
    else:
        shifted, flow_sign, leading, step = vadd(n, tuple(-x for x in e)), -1, n[gamma - 1] - 1, -1

    times = {(gamma, k): TruncSeries.var(var, order, k).scale(Fraction(1, k))
             for k in range(1, order + 1)}
    is_bra = rule.startswith("bra")
    if is_bra:
        # <n'| exp(flow * J([w])) with J using J_k
        t = TimeAssignment.from_map(times, bar=False)
        vec = apply_exp_current_left(t, flow_sign, vacuum_bra(shifted, w, order))
        series = pair(vec, probe)
    else:
        # exp(flow * Jbar([w])) |n'> with Jbar using J_{-k}
        t = TimeAssignment.from_map(times, bar=True)
        vec = apply_exp_current(t, flow_sign, vacuum_ket(shifted, w, order))
        series = pair(probe, vec)
    out = {}
    for m in range(-bound, bound + 1):
        j = leading + step * m
        if not w.j_min <= j < w.j_max:
            raise ValueError("window too small for the requested degree bound")
        mode = ModeId(gamma, j)
        if is_bra:
            lhs = pair(apply_fermion_left(kind, mode, vacuum_bra(n, w, order)), probe)
        else:
            lhs = pair(probe, apply_fermion(kind, mode, vacuum_ket(n, w, order)))
        lhs = lhs.constant_term()
        rhs = Fraction(0)
        if m >= 0:
            rhs = eps * series.coefficient(((var, m),) if m else ())
        out[j] = (lhs, rhs)
    return out


def bosonization_residual(rule: str, n: Sequence[int], gamma: int, z_degree_bound: int,
                          probes: Iterable[StateVector]) -> Fraction:
    """Max coefficient discrepancy of one bosonization rule over the probes."""
    worst = Fraction(0)
    for p in probes:
        for lhs, rhs in bosonization_sides(rule, n, gamma, z_degree_bound, p).values():
            worst = max(worst, abs(lhs - rhs))
    return worst
