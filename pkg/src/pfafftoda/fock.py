"""Truncated multi-component fermionic Fock space.

A basis state is an int bitmask over the modes of a :class:`Window`.  Mode
``(gamma, j)`` sits at bit ``(gamma - 1) * width + (j - j_min)``, so the bit
order is component ascending, then momentum ascending.  The Jordan-Wigner
sign of an operator on a mode is the parity of the occupied bits below it.

Bras are stored as ordinary state vectors: ``<u| X`` is represented by the
vector ``X^T |u>``.  In the occupation basis ``psi^T = psi_star`` and vice
versa, so a left action is just the right action of the other kind.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, NamedTuple, Sequence, Tuple

from .series import TruncSeries

PSI = "psi"
PSI_STAR = "psi_star"


class ModeId(NamedTuple):
    component: int
    momentum: int


@dataclass(frozen=True)
class Window:
    N: int
    j_min: int
    j_max: int

    def __post_init__(self):
        if self.N < 1:
            raise ValueError("need at least one component")
        if not (self.j_min < 0 <= self.j_max):
            raise ValueError(f"window must satisfy j_min < 0 <= j_max, got [{self.j_min}, {self.j_max})")

    @property
    def width(self) -> int:
        return self.j_max - self.j_min

    @property
    def n_modes(self) -> int:
        return self.N * self.width

    def contains(self, mode: ModeId) -> bool:
        return 1 <= mode.component <= self.N and self.j_min <= mode.momentum < self.j_max

    def index(self, mode: ModeId) -> int:
        if not self.contains(mode):
            raise IndexError(f"mode {tuple(mode)} outside window [{self.j_min}, {self.j_max}) x {self.N}")
        return (mode.component - 1) * self.width + (mode.momentum - self.j_min)

    def mode_at(self, idx: int) -> ModeId:
        gamma, off = divmod(idx, self.width)
        return ModeId(gamma + 1, off + self.j_min)

    def modes(self) -> List[ModeId]:
        return [ModeId(g, j) for g in range(1, self.N + 1)
                for j in range(self.j_min, self.j_max)]

    def component_mask(self, gamma: int) -> int:
        return ((1 << self.width) - 1) << ((gamma - 1) * self.width)

    @property
    def sea(self) -> int:
        """Bitmask of the zero-charge vacuum: every j < 0 occupied."""
        block = (1 << (-self.j_min)) - 1
        mask = 0
        for g in range(self.N):
            mask |= block << (g * self.width)
        return mask

    def enlarged(self, by: int = 1) -> "Window":
        return Window(self.N, self.j_min - by, self.j_max + by)

    def covers(self, other: "Window") -> bool:
        return self.N == other.N and self.j_min <= other.j_min and self.j_max >= other.j_max


def _parity_below(basis: int, idx: int) -> int:
    return bin(basis & ((1 << idx) - 1)).count("1") & 1


class StateVector:
    """Sparse map from basis bitmasks to :class:`TruncSeries` coefficients."""

    __slots__ = ("window", "terms")

    def __init__(self, window: Window, terms: Dict[int, TruncSeries] | None = None):
        self.window = window
        self.terms = {b: c for b, c in (terms or {}).items() if not c.is_zero()}

    @classmethod
    def _raw(cls, window, terms):
        obj = cls.__new__(cls)
        obj.window = window
        obj.terms = terms
        return obj

    @classmethod
    def basis(cls, window: Window, basis: int, coeff: TruncSeries) -> "StateVector":
        return cls(window, {basis: coeff})

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "StateVector") -> "StateVector":
        _same_window(self, other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            if b in out:
                s = out[b] + c
                if s.is_zero():
                    del out[b]
                else:
                    out[b] = s
            else:
                out[b] = c
        return StateVector._raw(self.window, out)

    def __neg__(self):
        return StateVector._raw(self.window, {b: -c for b, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "StateVector":
        if isinstance(c, TruncSeries):
            out = {}
            for b, v in self.terms.items():
                p = v * c
                if not p.is_zero():
                    out[b] = p
            return StateVector._raw(self.window, out)
        if not c:
            return StateVector._raw(self.window, {})
        return StateVector._raw(self.window, {b: v.scale(c) for b, v in self.terms.items()})

    def __eq__(self, other):
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.window == other.window and self.terms == other.terms

    def max_abs(self) -> Fraction:
        return max((c.max_abs() for c in self.terms.values()), default=Fraction(0))

    def charge(self, basis: int) -> Tuple[int, ...]:
        return charge_of(self.window, basis)

    def dump(self) -> str:
        """Sorted ``(occupation-diff-from-sea) : coefficient`` lines."""
        lines = []
        for b, c in self.terms.items():
            lines.append(f"({basis_diff_text(self.window, b)}) : {c.to_text()}")
        return "\n".join(sorted(lines))

    def __repr__(self):
        return f"StateVector({len(self.terms)} terms)\n{self.dump()}"


def _same_window(u: StateVector, v: StateVector):
    if u.window != v.window:
        raise ValueError(f"window mismatch: {u.window} vs {v.window}")


def charge_of(window: Window, basis: int) -> Tuple[int, ...]:
    sea = window.sea
    out = []
    for g in range(1, window.N + 1):
        mask = window.component_mask(g)
        out.append(bin(basis & mask).count("1") - bin(sea & mask).count("1"))
    return tuple(out)


def basis_diff_text(window: Window, basis: int) -> str:
    """Particles (+) and holes (-) relative to the sea, e.g. ``+1:0 -2:-1``."""
    sea = window.sea
    parts = []
    for idx in range(window.n_modes):
        bit = 1 << idx
        if (basis ^ sea) & bit:
            g, j = window.mode_at(idx)
            parts.append(("+" if basis & bit else "-") + f"{g}:{j}")
    return " ".join(parts)


def basis_from_modes(window: Window, occupied: Iterable[ModeId]) -> int:
    b = 0
    for m in occupied:
        b |= 1 << window.index(ModeId(*m))
    return b


def modes_of(window: Window, basis: int) -> List[ModeId]:
    return [window.mode_at(i) for i in range(window.n_modes) if basis >> i & 1]


def apply_fermion(kind: str, mode: ModeId, v: StateVector) -> StateVector:
    """Act with psi (fill) or psi_star (empty) on ``mode``."""
    w = v.window
    idx = w.index(ModeId(*mode))
    bit = 1 << idx
    out: Dict[int, TruncSeries] = {}
    if kind == PSI:
        want = 0
    elif kind == PSI_STAR:
        want = bit
    else:
        raise ValueError(f"unknown fermion kind {kind!r}")
    for b, c in v.terms.items():
        if b & bit != want:
            continue
        nb = b ^ bit
        out[nb] = -c if _parity_below(b, idx) else c
    return StateVector._raw(w, out)


def transpose_kind(kind: str) -> str:
    return PSI_STAR if kind == PSI else PSI


def apply_fermion_left(kind: str, mode: ModeId, bra: StateVector) -> StateVector:
    """The bra ``<u| X`` for X = psi or psi_star, as the vector ``X^T |u>``."""
    return apply_fermion(transpose_kind(kind), mode, bra)


def vacuum_state(window: Window) -> StateVector:
    return StateVector(window, {window.sea: TruncSeries.const(1, 0)})


def _ket_factors(n_alpha: int) -> List[Tuple[str, int]]:
    # Psi*_n = psi_{n-1} ... psi_0 (n > 0), psi*_n ... psi*_{-1} (n < 0);
    # listed in the order they hit the ket (rightmost first)
    if n_alpha > 0:
        return [(PSI, j) for j in range(0, n_alpha)]
    return [(PSI_STAR, j) for j in range(-1, n_alpha - 1, -1)]


def _bra_factors(n_alpha: int) -> List[Tuple[str, int]]:
    # Psi_n = psi*_0 ... psi*_{n-1} (n > 0), psi_{-1} ... psi_n (n < 0);
    # listed left to right
    if n_alpha > 0:
        return [(PSI_STAR, j) for j in range(0, n_alpha)]
    return [(PSI, j) for j in range(-1, n_alpha - 1, -1)]


def _check_charge_fits(window: Window, n: Sequence[int]):
    if len(n) != window.N:
        raise ValueError(f"charge vector {tuple(n)} has wrong length for N={window.N}")
    for a in n:
        if a > 0 and a - 1 >= window.j_max or a < 0 and a < window.j_min:
            raise ValueError(f"charge {tuple(n)} too large for window [{window.j_min}, {window.j_max})")


def vacuum_ket(n: Sequence[int], window: Window, order: int = 0) -> StateVector:
    """``|n> = Psi*^{(N)}_{n_N} ... Psi*^{(1)}_{n_1} |0>`` applied literally."""
    _check_charge_fits(window, n)
    v = StateVector(window, {window.sea: TruncSeries.const(1, order)})
    for alpha, n_alpha in enumerate(n, start=1):
        for kind, j in _ket_factors(n_alpha):
            v = apply_fermion(kind, ModeId(alpha, j), v)
    return v


def vacuum_bra(n: Sequence[int], window: Window, order: int = 0) -> StateVector:
    """``<n| = <0| Psi^{(1)}_{n_1} ... Psi^{(N)}_{n_N}`` applied literally."""
    _check_charge_fits(window, n)
    v = StateVector(window, {window.sea: TruncSeries.const(1, order)})
    for alpha, n_alpha in enumerate(n, start=1):
        for kind, j in _bra_factors(n_alpha):
            v = apply_fermion_left(kind, ModeId(alpha, j), v)
    return v


def pair(bra: StateVector, ket: StateVector) -> TruncSeries:
    _same_window(bra, ket)
    small, big = (bra, ket) if len(bra.terms) <= len(ket.terms) else (ket, bra)
    acc = None
    for b, c in small.terms.items():
        d = big.terms.get(b)
        if d is None:
            continue
        p = c * d
        acc = p if acc is None else acc + p
    if acc is None:
        order = min([c.order for c in bra.terms.values()] + [c.order for c in ket.terms.values()] or [0])
        return TruncSeries.zero(order)
    return acc


def eps_component(gamma: int, n: Sequence[int]) -> int:
    """(-1)^(n_{gamma+1} + ... + n_N)."""
    if not 1 <= gamma <= len(n):
        raise ValueError("component out of range")
    return -1 if sum(n[gamma:]) % 2 else 1


def eps_pair(alpha: int, gamma: int, s: Sequence[int]) -> int:
    if alpha == gamma:
        return 1
    if alpha < gamma:
        return -1 if sum(s[alpha:gamma]) % 2 else 1
    return 1 if sum(s[gamma:alpha]) % 2 else -1


def unit(N: int, alpha: int, k: int = 1) -> Tuple[int, ...]:
    """k * e_alpha as a charge vector."""
    return tuple(k if i == alpha else 0 for i in range(1, N + 1))


def vadd(*vs: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(x) for x in zip(*vs))


def vneg(v: Sequence[int]) -> Tuple[int, ...]:
    return tuple(-x for x in v)
