"""The tau-function <n| e^{J(t)} g e^{-Jbar(tbar)} |-nbar> as an exact
truncated series in formal Miwa variables."""
from __future__ import annotations

import threading
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Optional, Sequence, Tuple

from .clifford import IDENTITY, CliffordElement, g_apply
from .currents import (MiwaShiftSpec, TimeAssignment, apply_exp_current,
                       apply_exp_current_left, miwa_times)
from .fock import Window, pair, unit, vacuum_bra, vacuum_ket, vadd, vneg
from .series import TruncSeries

# base times: ((component, order, variable name), ...) meaning t_{g,k} += var
BaseTimes = Tuple[Tuple[int, int, str], ...]


def _canon_shifts(shifts: Iterable[MiwaShiftSpec]) -> Tuple[Tuple[int, str, int], ...]:
    """Net shift multiplicities as sorted (component, var, count), zeros dropped.

    Extended flags are folded into the stored charges, so they are not part
    of the canonical key.
    """
    c: Counter = Counter()
    for s in shifts:
        c[(s.component, s.var)] += s.sign
    return tuple(sorted((g, v, k) for (g, v), k in c.items() if k))


@dataclass(frozen=True)
class TauArgument:
    """(n, nbar, t, tbar) with t = base_t + sum of Miwa shifts (likewise tbar).

    ``t_shifts`` and ``tbar_shifts`` are canonical tuples (component, var,
    multiplicity); use :meth:`make` to build from MiwaShiftSpec lists.
    """
    n: Tuple[int, ...]
    nbar: Tuple[int, ...]
    t_shifts: Tuple[Tuple[int, str, int], ...] = ()
    tbar_shifts: Tuple[Tuple[int, str, int], ...] = ()
    base_t: BaseTimes = ()
    base_tbar: BaseTimes = ()

    @classmethod
    def make(cls, n: Sequence[int], nbar: Sequence[int],
             t_shifts: Iterable[MiwaShiftSpec] = (), tbar_shifts: Iterable[MiwaShiftSpec] = (),
             base_t: BaseTimes = (), base_tbar: BaseTimes = ()) -> "TauArgument":
        """Extended shifts move the matching charge by the shift sign."""
        t_shifts, tbar_shifts = list(t_shifts), list(tbar_shifts)
        N = len(n)
        n = tuple(n)
        nbar = tuple(nbar)
        for s in t_shifts:
            if s.extended:
                n = vadd(n, unit(N, s.component, s.sign))
        for s in tbar_shifts:
            if s.extended:
                nbar = vadd(nbar, unit(N, s.component, s.sign))
        return cls(n, nbar, _canon_shifts(t_shifts), _canon_shifts(tbar_shifts),
                   tuple(sorted(base_t)), tuple(sorted(base_tbar)))

    @property
    def N(self) -> int:
        return len(self.n)

    def shifted(self, dn=None, dnbar=None, t_shifts: Iterable[MiwaShiftSpec] = (),
                tbar_shifts: Iterable[MiwaShiftSpec] = ()) -> "TauArgument":
        """A new argument with charges moved by (dn, dnbar) and further shifts."""
        n = self.n if dn is None else vadd(self.n, dn)
        nbar = self.nbar if dnbar is None else vadd(self.nbar, dnbar)
        ts = _expand(self.t_shifts) + list(t_shifts)
        tbs = _expand(self.tbar_shifts) + list(tbar_shifts)
        return TauArgument.make(n, nbar, ts, tbs, self.base_t, self.base_tbar)

    def swap_bar(self) -> "TauArgument":
        """(n, nbar, t, tbar) -> (nbar, n, tbar, t)."""
        return TauArgument(self.nbar, self.n, self.tbar_shifts, self.t_shifts,
                           self.base_tbar, self.base_t)

    def variables(self) -> set:
        out = {v for _, v, _ in self.t_shifts + self.tbar_shifts}
        out |= {v for _, _, v in self.base_t + self.base_tbar}
        return out

    def shorthand(self, base: Optional["TauArgument"] = None) -> str:
        """Compact text: charges as n^{...}_{...} offsets from ``base`` and
        time shifts as t^{[a_1 b_2]}_{[c_1]} (upper = +, lower = -)."""
        return shorthand(self, base)

    def to_json(self) -> dict:
        return {"n": list(self.n), "nbar": list(self.nbar),
                "t_shifts": [list(x) for x in self.t_shifts],
                "tbar_shifts": [list(x) for x in self.tbar_shifts],
                "base_t": [list(x) for x in self.base_t],
                "base_tbar": [list(x) for x in self.base_tbar]}


def _expand(canon) -> list:
    out = []
    for g, v, k in canon:
        out.extend([MiwaShiftSpec(1 if k > 0 else -1, g, v)] * abs(k))
    return out


def _charge_offsets(n, base_n) -> str:
    up, down = [], []
    for alpha, (a, b) in enumerate(zip(n, base_n), start=1):
        d = a - b
        (up if d > 0 else down).extend([str(alpha)] * abs(d))
    s = ""
    if up:
        s += "^{" + "".join(up) + "}"
    if down:
        s += "_{" + "".join(down) + "}"
    return s


def _shift_offsets(shifts, base_shifts) -> str:
    c = Counter({(g, v): k for g, v, k in shifts})
    for g, v, k in base_shifts:
        c[(g, v)] -= k
    up, down = [], []
    for (g, v), k in sorted(c.items(), key=lambda x: (x[0][1], x[0][0])):
        (up if k > 0 else down).extend([f"{v}_{g}"] * abs(k))
    s = ""
    if up:
        s += "^{[" + " ".join(up) + "]}"
    if down:
        s += "_{[" + " ".join(down) + "]}"
    return s


def shorthand(arg: TauArgument, base: Optional[TauArgument] = None) -> str:
    if base is None:
        base = TauArgument(tuple(0 for _ in arg.n), tuple(0 for _ in arg.n))
        n_part = "n" + (f"={list(arg.n)}" if any(arg.n) else "")
        nb_part = "nbar" + (f"={list(arg.nbar)}" if any(arg.nbar) else "")
    else:
        n_part = "n" + _charge_offsets(arg.n, base.n)
        nb_part = "nbar" + _charge_offsets(arg.nbar, base.nbar)
    t_part = "t" + _shift_offsets(arg.t_shifts, base.t_shifts)
    tb_part = "tbar" + _shift_offsets(arg.tbar_shifts, base.tbar_shifts)
    return f"tau({n_part}, {nb_part}, {t_part}, {tb_part})"


@dataclass(frozen=True)
class EvalContext:
    """g, truncation order D and component count N.

    ``window=None`` means each argument gets its own :func:`window_bound`.
    """
    g: CliffordElement = IDENTITY
    D: int = 5
    N: int = 1
    window: Optional[Window] = None

    def __post_init__(self):
        if self.D < 0:
            raise ValueError("D must be non-negative")
        if self.g.max_component() > self.N:
            raise ValueError("Clifford element uses a component beyond N")


def parity_vanishes(n: Sequence[int], nbar: Sequence[int]) -> bool:
    return (sum(n) - sum(nbar)) % 2 == 1


def _time_assignment(shifts, base, D: int, bar: bool) -> TimeAssignment:
    t = TimeAssignment((), bar)
    for g, v, k in shifts:
        spec = MiwaShiftSpec(1 if k > 0 else -1, g, v)
        mt = miwa_times(spec, D, bar=bar)
        for _ in range(abs(k)):
            t = t + mt
    if base:
        entries = t.as_map()
        for g, k, v in base:
            x = TruncSeries.var(v, D)
            entries[(g, k)] = entries[(g, k)] + x if (g, k) in entries else x
        t = TimeAssignment.from_map(entries, bar)
    return t


def _k_shift(arg: TauArgument) -> int:
    # momentum transferred per unit of degree: 1 for Miwa shifts, k for t_{g,k} = s
    ks = [1] if (arg.t_shifts or arg.tbar_shifts) else []
    ks += [k for _, k, _ in arg.base_t + arg.base_tbar]
    return max(ks, default=0)


def window_bound(arg: TauArgument, ctx: EvalContext) -> Window:
    """Window [-R-1, R+1) with reach R = max|charge| + g radius + D * K_shift."""
    charge = max([abs(x) for x in arg.n + arg.nbar] + [0])
    reach = charge + ctx.g.radius() + ctx.D * _k_shift(arg)
    return Window(ctx.N, -reach - 1, reach + 1)


class _Memo:
    """Dict guarded by a lock; entries are idempotent so last write wins."""

    def __init__(self):
        self._d: Dict = {}
        self._lock = threading.Lock()

    def get(self, key):
        return self._d.get(key)

    def put(self, key, value):
        with self._lock:
            self._d[key] = value

    def clear(self):
        with self._lock:
            self._d.clear()

    def __len__(self):
        return len(self._d)


_TAU_MEMO = _Memo()
_BRA_MEMO = _Memo()
_KET_MEMO = _Memo()


def clear_memo():
    for m in (_TAU_MEMO, _BRA_MEMO, _KET_MEMO):
        m.clear()


def _bra(arg: TauArgument, window: Window, D: int):
    key = (arg.n, arg.t_shifts, arg.base_t, window, D)
    v = _BRA_MEMO.get(key)
    if v is None:
        t = _time_assignment(arg.t_shifts, arg.base_t, D, bar=False)
        v = apply_exp_current_left(t, 1, vacuum_bra(arg.n, window, D))
        _BRA_MEMO.put(key, v)
    return v


def _ket(arg: TauArgument, window: Window, D: int, g: CliffordElement):
    key = (arg.nbar, arg.tbar_shifts, arg.base_tbar, window, D, g)
    v = _KET_MEMO.get(key)
    if v is None:
        tb = _time_assignment(arg.tbar_shifts, arg.base_tbar, D, bar=True)
        v = apply_exp_current(tb, -1, vacuum_ket(vneg(arg.nbar), window, D))
        v = g_apply(g, v)
        _KET_MEMO.put(key, v)
    return v


def tau_in_window(arg: TauArgument, ctx: EvalContext, window: Window) -> TruncSeries:
    if arg.N != ctx.N or len(arg.nbar) != ctx.N:
        raise ValueError("argument has the wrong number of components")
    if parity_vanishes(arg.n, arg.nbar):
        return TruncSeries.zero(ctx.D)
    key = (arg, ctx.g, window, ctx.D)
    val = _TAU_MEMO.get(key)
    if val is None:
        val = pair(_bra(arg, window, ctx.D), _ket(arg, window, ctx.D, ctx.g))
        _TAU_MEMO.put(key, val)
    return val


class WindowInsufficient(ValueError):
    pass


def tau(arg: TauArgument, ctx: EvalContext) -> TruncSeries:
    """Exact tau through total degree D."""
    need = window_bound(arg, ctx)
    window = ctx.window or need
    if ctx.window is not None and not window.covers(need):
        raise WindowInsufficient(f"window {window} smaller than required {need} for {shorthand(arg)}")
    return tau_in_window(arg, ctx, window)


def stabilization_check(arg: TauArgument, ctx: EvalContext, window: Optional[Window] = None) -> bool:
    """True iff growing the window by one slot on each side changes nothing."""
    w = window or ctx.window or window_bound(arg, ctx)
    return tau_in_window(arg, ctx, w) == tau_in_window(arg, ctx, w.enlarged(1))


def tau_matrix(alpha: int, beta: int, s: Sequence[int], r: Sequence[int], ctx: EvalContext,
               t_shifts: Iterable[MiwaShiftSpec] = (), tbar_shifts: Iterable[MiwaShiftSpec] = ()) -> TruncSeries:
    """tau_{alpha beta}(s, r) = tau(s + r + e_alpha - e_beta, r - s)."""
    N = len(s)
    n = vadd(s, r, unit(N, alpha), unit(N, beta, -1))
    nbar = vadd(r, vneg(s))
    return tau(TauArgument.make(n, nbar, t_shifts, tbar_shifts), ctx)
