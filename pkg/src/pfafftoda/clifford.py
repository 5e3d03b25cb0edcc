"""Clifford group elements as ordered products of (1 + lambda Q) factors with
Q a nilpotent fermion bilinear, and the operator bilinear identity check."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple, Union

from .fock import (PSI, PSI_STAR, ModeId, StateVector, Window, apply_fermion)
from .series import TruncSeries

KINDS = ("AA", "BB", "CC")
_KIND_OPS = {"AA": (PSI, PSI_STAR), "BB": (PSI, PSI), "CC": (PSI_STAR, PSI_STAR)}

CLIFFORD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "CliffordElement",
    "description": "Ordered factors (1 + lambda Q); the last factor acts first. "
                   "AA: Q = psi psi*, BB: Q = psi psi, CC: Q = psi* psi*.",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["kind", "component1", "momentum1", "component2", "momentum2", "lambda"],
        "additionalProperties": False,
        "properties": {
            "kind": {"enum": list(KINDS)},
            "component1": {"type": "integer", "minimum": 1},
            "momentum1": {"type": "integer"},
            "component2": {"type": "integer", "minimum": 1},
            "momentum2": {"type": "integer"},
            "lambda": {"type": "string", "pattern": r"^-?\d+(/\d+)?$"},
        },
    },
}


@dataclass(frozen=True)
class QuadFactor:
    kind: str
    first: ModeId
    second: ModeId
    lam: Fraction

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown factor kind {self.kind!r}")
        object.__setattr__(self, "first", ModeId(*self.first))
        object.__setattr__(self, "second", ModeId(*self.second))
        object.__setattr__(self, "lam", Fraction(self.lam))
        if self.first == self.second:
            raise ValueError("factor modes must differ (Q must square to zero and be nonzero)")

    def apply_q(self, v: StateVector) -> StateVector:
        op1, op2 = _KIND_OPS[self.kind]
        return apply_fermion(op1, self.first, apply_fermion(op2, self.second, v))

    def apply(self, v: StateVector) -> StateVector:
        return v + self.apply_q(v).scale(self.lam)

    def charge_change(self) -> int:
        return {"AA": 0, "BB": 2, "CC": -2}[self.kind]

    def radius(self) -> int:
        """Smallest r with both modes inside [-r, r)."""
        return max(max(-m.momentum, m.momentum + 1) for m in (self.first, self.second))

    def to_record(self) -> dict:
        return {"kind": self.kind,
                "component1": self.first.component, "momentum1": self.first.momentum,
                "component2": self.second.component, "momentum2": self.second.momentum,
                "lambda": str(self.lam)}

    @classmethod
    def from_record(cls, rec: dict) -> "QuadFactor":
        return cls(rec["kind"], ModeId(int(rec["component1"]), int(rec["momentum1"])),
                   ModeId(int(rec["component2"]), int(rec["momentum2"])), Fraction(rec["lambda"]))


@dataclass(frozen=True)
class CliffordElement:
    """g = f_1 f_2 ... f_m; applied right to left."""
    factors: Tuple[QuadFactor, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))

    def inverse(self) -> "CliffordElement":
        return CliffordElement(tuple(QuadFactor(f.kind, f.first, f.second, -f.lam)
                                     for f in reversed(self.factors)))

    def radius(self) -> int:
        return max((f.radius() for f in self.factors), default=0)

    def max_component(self) -> int:
        return max((max(f.first.component, f.second.component) for f in self.factors), default=0)

    def to_records(self) -> List[dict]:
        return [f.to_record() for f in self.factors]

    @classmethod
    def from_records(cls, recs: Iterable[dict]) -> "CliffordElement":
        return cls(tuple(QuadFactor.from_record(r) for r in recs))

    def __call__(self, v: StateVector) -> StateVector:
        return g_apply(self, v)


IDENTITY = CliffordElement(())


def g_apply(g: CliffordElement, v: StateVector) -> StateVector:
    for f in reversed(g.factors):
        for m in (f.first, f.second):
            if not v.window.contains(m):
                raise ValueError(f"factor mode {tuple(m)} outside window")
        v = f.apply(v)
    return v


def g_random(seed: int, window: Window, n_factors: int, margin: int = 0) -> CliffordElement:
    """Seeded mixed-kind factors on modes in [j_min + margin, j_max - margin)."""
    lo, hi = window.j_min + margin, window.j_max - margin
    if hi - lo < 1 or (window.N == 1 and hi - lo < 2):
        raise ValueError("margin leaves no interior room")
    rng = random.Random(seed)
    kinds = list(KINDS)
    rng.shuffle(kinds)
    factors = []
    for i in range(n_factors):
        kind = kinds[i] if i < 3 else rng.choice(KINDS)
        while True:
            m1 = ModeId(rng.randint(1, window.N), rng.randrange(lo, hi))
            m2 = ModeId(rng.randint(1, window.N), rng.randrange(lo, hi))
            if m1 != m2:
                break
        num = rng.choice([-3, -2, -1, 1, 2, 3])
        den = rng.randint(1, 3)
        factors.append(QuadFactor(kind, m1, m2, Fraction(num, den)))
    return CliffordElement(tuple(factors))


# -- operator bilinear identity ----------------------------------------------

Tensor = Dict[Tuple[int, int], TruncSeries]


def _tensor_add(acc: Tensor, u: StateVector, v: StateVector):
    for b1, c1 in u.terms.items():
        for b2, c2 in v.terms.items():
            p = c1 * c2
            key = (b1, b2)
            if key in acc:
                acc[key] = acc[key] + p
            else:
                acc[key] = p


def _tensor_sub(acc: Tensor, u: StateVector, v: StateVector):
    _tensor_add(acc, u, -v)


Operator = Union[CliffordElement, Callable[[StateVector], StateVector]]


def _as_callable(g: Operator) -> Callable[[StateVector], StateVector]:
    if isinstance(g, CliffordElement):
        return lambda v: g_apply(g, v)
    return g


def bilinear_identity_tensor(g: Operator, u: StateVector, v: StateVector) -> Tensor:
    """sum_modes [psi g u (x) psi* g v + psi* g u (x) psi g v]
    - sum_modes [g psi u (x) g psi* v + g psi* u (x) g psi v]."""
    G = _as_callable(g)
    w = u.window
    gu, gv = G(u), G(v)
    acc: Tensor = {}
    for mode in w.modes():
        _tensor_add(acc, apply_fermion(PSI, mode, gu), apply_fermion(PSI_STAR, mode, gv))
        _tensor_add(acc, apply_fermion(PSI_STAR, mode, gu), apply_fermion(PSI, mode, gv))
        _tensor_sub(acc, G(apply_fermion(PSI, mode, u)), G(apply_fermion(PSI_STAR, mode, v)))
        _tensor_sub(acc, G(apply_fermion(PSI_STAR, mode, u)), G(apply_fermion(PSI, mode, v)))
    return acc


FULL = "full"
MAX_FULL_MODES = 8


def bilinear_identity_residual(g: Operator, window: Window,
                               pairs: Union[str, Sequence[Tuple[StateVector, StateVector]]] = FULL) -> Fraction:
    """Max-norm of the bilinear identity tensor over the given (u, v) pairs.

    ``pairs="full"`` runs over every pair of basis states (at most 8 modes).
    """
    if isinstance(pairs, str):
        if pairs != FULL:
            raise ValueError(f"unknown pairs spec {pairs!r}")
        if window.n_modes > MAX_FULL_MODES:
            raise ValueError(f"full tensor check limited to {MAX_FULL_MODES} modes, window has {window.n_modes}")
        one = TruncSeries.const(1, 0)
        states = [StateVector(window, {b: one}) for b in range(1 << window.n_modes)]
        pairs = [(u, v) for u in states for v in states]
    worst = Fraction(0)
    for u, v in pairs:
        t = bilinear_identity_tensor(g, u, v)
        for c in t.values():
            worst = max(worst, c.max_abs())
    return worst


def quartic_map(window: Window, c: Fraction = Fraction(1)) -> Callable[[StateVector], StateVector]:
    """v -> v + c psi_0 psi_1 psi*_0 psi*_1 v (component 1): not a Clifford element."""
    m0, m1 = ModeId(1, 0), ModeId(1, 1)

    def apply(v: StateVector) -> StateVector:
        q = apply_fermion(PSI_STAR, m1, v)
        q = apply_fermion(PSI_STAR, m0, q)
        q = apply_fermion(PSI, m1, q)
        q = apply_fermion(PSI, m0, q)
        return v + q.scale(c)

    return apply
