"""Schemes (L+, L- | R+, R-), their classification and the general
non-degenerate Hirota-Miwa relation built from a scheme."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Sequence, Tuple

from ..currents import MiwaShiftSpec
from ..fock import unit, vadd
from ..series import TruncSeries
from ..taueval import TauArgument
from .relation import LHS, RHS, POLY_ORDER, Coeff, Relation, RelationTerm

SLOTS = ("Lp", "Lm", "Rp", "Rm")


def e_factor(alpha: int, beta: int, vi: str, vj: str) -> Tuple[int, TruncSeries]:
    """E_{alpha beta}(z_i, z_j) as (sign, poly): sign +1 iff alpha <= beta,
    poly = eps_i - eps_j when alpha == beta and 1 otherwise."""
    sign = 1 if alpha <= beta else -1
    if alpha == beta:
        return sign, TruncSeries.var(vi, POLY_ORDER) - TruncSeries.var(vj, POLY_ORDER)
    return sign, TruncSeries.const(1, POLY_ORDER)


def e_coeff(alpha: int, beta: int, vi: str, vj: str) -> Coeff:
    sign, poly = e_factor(alpha, beta, vi, vj)
    return Coeff(poly.scale(sign))


def e_inv_coeff(alpha: int, beta: int, vi: str, vj: str) -> Coeff:
    sign = 1 if alpha <= beta else -1
    if alpha == beta:
        c = Coeff.inv_diff(vi, vj)
        return c if sign == 1 else -c
    return Coeff.const(sign)


@dataclass(frozen=True)
class Scheme:
    """Counts of positive/negative Miwa insertions on t (L) and tbar (R),
    with the component index attached to every insertion."""
    Lp: Tuple[int, ...] = ()
    Lm: Tuple[int, ...] = ()
    Rp: Tuple[int, ...] = ()
    Rm: Tuple[int, ...] = ()

    def __post_init__(self):
        for s in SLOTS:
            v = tuple(getattr(self, s))
            if any((not isinstance(x, int)) or x < 1 for x in v):
                raise ValueError(f"slot {s} needs positive component indices, got {v}")
            object.__setattr__(self, s, v)

    @property
    def signature(self) -> Tuple[int, int, int, int]:
        return (len(self.Lp), len(self.Lm), len(self.Rp), len(self.Rm))

    @property
    def M(self) -> int:
        return sum(self.signature)

    @property
    def parity_ok(self) -> bool:
        return signature_parity_ok(self.signature)

    def components(self) -> List[int]:
        return list(self.Lp + self.Lm + self.Rp + self.Rm)


def signature_parity_ok(sig: Sequence[int]) -> bool:
    lp, lm, rp, rm = sig
    return (abs(lp - lm) - abs(rp - rm)) % 2 == 0


def signature_text(sig: Sequence[int]) -> str:
    return f"({sig[0]},{sig[1]}|{sig[2]},{sig[3]})"


def _sigma1(sig):
    lp, lm, rp, rm = sig
    return (lm, lp, rm, rp)


def _sigma2(sig):
    lp, lm, rp, rm = sig
    return (rp, rm, lp, lm)


def symmetry_orbit(sig: Sequence[int]) -> set:
    out = {tuple(sig)}
    frontier = [tuple(sig)]
    while frontier:
        s = frontier.pop()
        for f in (_sigma1, _sigma2):
            x = f(s)
            if x not in out:
                out.add(x)
                frontier.append(x)
    return out


def classify_schemes(M: int, intertwining: bool = False, mod_symmetry: bool = False) -> List[Tuple[int, int, int, int]]:
    """All (Lp, Lm, Rp, Rm) with sum M passing the parity condition.

    One representative per symmetry orbit is kept (the lexicographically
    largest) when ``mod_symmetry`` is set.
    """
    if M < 1:
        raise ValueError("M must be positive")
    sigs = [s for s in product(range(M + 1), repeat=4) if sum(s) == M and signature_parity_ok(s)]
    if intertwining:
        sigs = [s for s in sigs if (s[0], s[1]) != (0, 0) and (s[2], s[3]) != (0, 0)]
    if mod_symmetry:
        reps = set()
        for s in sigs:
            reps.add(max(x for x in symmetry_orbit(s) if x in sigs))
        sigs = reps
    return sorted(sigs, reverse=True)


DEFAULT_VARS = ("a", "b", "c", "d", "e", "f", "g", "h")


def slot_vars(scheme: Scheme, names: Sequence[str] = DEFAULT_VARS) -> Dict[str, Tuple[str, ...]]:
    """Point variables assigned in slot order Lp, Lm, Rp, Rm."""
    if scheme.M > len(names):
        raise ValueError("not enough variable names")
    out, i = {}, 0
    for s in SLOTS:
        k = len(getattr(scheme, s))
        out[s] = tuple(names[i:i + k])
        i += k
    if len(set(names[:i])) != i:
        raise ValueError("point variables must be distinct")
    return out


def build_genHM(scheme: Scheme, point_vars: Dict[str, Sequence[str]], base: TauArgument,
                label: str = "") -> Relation:
    """The general Hirota-Miwa relation of ``scheme`` around ``base``.

    The residue at each insertion point gives one term; inverse E factors
    are stored as symbolic denominators.
    """
    N = base.N
    if max(scheme.components(), default=1) > N:
        raise ValueError("scheme uses a component beyond N")
    pv = {s: tuple(point_vars.get(s, ())) for s in SLOTS}
    for s in SLOTS:
        if len(pv[s]) != len(getattr(scheme, s)):
            raise ValueError(f"slot {s} needs {len(getattr(scheme, s))} variables")
    zero = tuple([0] * N)
    # aggregate shifts: n' = n + k, t' = t + T (and barred)
    k, kb = zero, zero
    T, Tb = [], []
    for al, z in zip(scheme.Lp, pv["Lp"]):
        k = vadd(k, unit(N, al, -1))
        T.append(MiwaShiftSpec(-1, al, z))
    for be, z in zip(scheme.Lm, pv["Lm"]):
        k = vadd(k, unit(N, be, 1))
        T.append(MiwaShiftSpec(1, be, z))
    for al, z in zip(scheme.Rp, pv["Rp"]):
        kb = vadd(kb, unit(N, al, -1))
        Tb.append(MiwaShiftSpec(-1, al, z))
    for be, z in zip(scheme.Rm, pv["Rm"]):
        kb = vadd(kb, unit(N, be, 1))
        Tb.append(MiwaShiftSpec(1, be, z))

    def cross(plus_c, plus_v, minus_c, minus_v, s_comp, s_var, same_is_plus):
        c = Coeff.one()
        same_c, same_v = (plus_c, plus_v) if same_is_plus else (minus_c, minus_v)
        other_c, other_v = (minus_c, minus_v) if same_is_plus else (plus_c, plus_v)
        for x, (cx, vx) in enumerate(zip(same_c, same_v)):
            if vx == s_var:
                continue
            c = c * e_inv_coeff(cx, s_comp, s_var, vx)
        for cx, vx in zip(other_c, other_v):
            c = c * e_coeff(cx, s_comp, s_var, vx)
        return c

    terms = []
    for al, z in zip(scheme.Lp, pv["Lp"]):
        c = cross(scheme.Lp, pv["Lp"], scheme.Lm, pv["Lm"], al, z, True)
        left = base.shifted(dn=unit(N, al, -1), t_shifts=[MiwaShiftSpec(-1, al, z)])
        right = base.shifted(dn=vadd(k, unit(N, al, 1)), dnbar=kb,
                             t_shifts=T + [MiwaShiftSpec(1, al, z)], tbar_shifts=Tb)
        terms.append(RelationTerm(LHS, c, left, right))
    for be, z in zip(scheme.Lm, pv["Lm"]):
        c = cross(scheme.Lp, pv["Lp"], scheme.Lm, pv["Lm"], be, z, False)
        left = base.shifted(dn=unit(N, be, 1), t_shifts=[MiwaShiftSpec(1, be, z)])
        right = base.shifted(dn=vadd(k, unit(N, be, -1)), dnbar=kb,
                             t_shifts=T + [MiwaShiftSpec(-1, be, z)], tbar_shifts=Tb)
        terms.append(RelationTerm(LHS, c, left, right))
    for al, z in zip(scheme.Rp, pv["Rp"]):
        c = cross(scheme.Rp, pv["Rp"], scheme.Rm, pv["Rm"], al, z, True)
        left = base.shifted(dnbar=unit(N, al, -1), tbar_shifts=[MiwaShiftSpec(-1, al, z)])
        right = base.shifted(dn=k, dnbar=vadd(kb, unit(N, al, 1)),
                             t_shifts=T, tbar_shifts=Tb + [MiwaShiftSpec(1, al, z)])
        terms.append(RelationTerm(RHS, c, left, right))
    for be, z in zip(scheme.Rm, pv["Rm"]):
        c = cross(scheme.Rp, pv["Rp"], scheme.Rm, pv["Rm"], be, z, False)
        left = base.shifted(dnbar=unit(N, be, 1), tbar_shifts=[MiwaShiftSpec(1, be, z)])
        right = base.shifted(dn=k, dnbar=vadd(kb, unit(N, be, -1)),
                             t_shifts=T, tbar_shifts=Tb + [MiwaShiftSpec(-1, be, z)])
        terms.append(RelationTerm(RHS, c, left, right))
    rel = Relation(tuple(terms), base, label or f"genHM{signature_text(scheme.signature)}")
    return rel.with_meta(scheme=signature_text(scheme.signature),
                         components=str(tuple(scheme.components())))


def base_parity_ok(base: TauArgument) -> bool:
    """|n| - |nbar| odd: the base charges for which the relation is nontrivial."""
    return (sum(base.n) - sum(base.nbar)) % 2 == 1


def swap_primed(scheme: Scheme) -> Scheme:
    """Exchanging primed and unprimed data swaps Lp<->Lm and Rp<->Rm."""
    return Scheme(scheme.Lm, scheme.Lp, scheme.Rm, scheme.Rp)


def swap_barred(scheme: Scheme) -> Scheme:
    """Exchanging barred and unbarred data swaps (Lp, Lm) <-> (Rp, Rm)."""
    return Scheme(scheme.Rp, scheme.Rm, scheme.Lp, scheme.Lm)
