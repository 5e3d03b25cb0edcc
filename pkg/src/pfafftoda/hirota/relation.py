"""Bilinear relations: coefficient algebra, denominator clearing, residuals,
symbolic term comparison and export."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Tuple

from ..fock import Window
from ..series import TruncSeries
from ..taueval import (EvalContext, TauArgument, shorthand, tau_in_window,
                       window_bound)

# coefficients are polynomials in the formal variables; this order is far
# above any degree that a relation coefficient reaches
POLY_ORDER = 64

LHS = "LHS"
RHS = "RHS"

# denominator factors: ("var", x) is eps_x, ("diff", x, y) with x < y is eps_x - eps_y
DenFactor = Tuple[str, ...]


def _poly_var(x: str) -> TruncSeries:
    return TruncSeries.var(x, POLY_ORDER)


def _one() -> TruncSeries:
    return TruncSeries.const(1, POLY_ORDER)


def den_factor_poly(f: DenFactor) -> TruncSeries:
    if f[0] == "var":
        return _poly_var(f[1])
    return _poly_var(f[1]) - _poly_var(f[2])


def den_factor_text(f: DenFactor) -> str:
    if f[0] == "var":
        return f[1]
    return f"({f[1]} - {f[2]})"


@dataclass(frozen=True)
class Coeff:
    """num / prod(den): num a polynomial, den a sorted tuple of factors."""
    num: TruncSeries
    den: Tuple[DenFactor, ...] = ()

    @classmethod
    def one(cls) -> "Coeff":
        return cls(_one())

    @classmethod
    def const(cls, c) -> "Coeff":
        return cls(TruncSeries.const(c, POLY_ORDER))

    @classmethod
    def var(cls, x: str) -> "Coeff":
        return cls(_poly_var(x))

    @classmethod
    def diff(cls, x: str, y: str) -> "Coeff":
        """eps_x - eps_y."""
        return cls(_poly_var(x) - _poly_var(y))

    @classmethod
    def inv_var(cls, x: str) -> "Coeff":
        return cls(_one(), (("var", x),))

    @classmethod
    def inv_diff(cls, x: str, y: str) -> "Coeff":
        """1 / (eps_x - eps_y), stored with x < y and the sign moved up."""
        if x == y:
            raise ZeroDivisionError(f"coincident points {x} in a denominator")
        if x < y:
            return cls(_one(), (("diff", x, y),))
        return cls(-_one(), (("diff", y, x),))

    def __mul__(self, other: "Coeff") -> "Coeff":
        return Coeff(self.num * other.num, tuple(sorted(self.den + other.den)))

    def __neg__(self):
        return Coeff(-self.num, self.den)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def den_poly(self) -> TruncSeries:
        out = _one()
        for f in self.den:
            out = out * den_factor_poly(f)
        return out

    def sign(self) -> int:
        lead = self.num.leading_term()
        if lead is None:
            return 0
        return 1 if lead[1] > 0 else -1

    def to_text(self) -> str:
        num = self.num.to_text()
        if not self.den:
            return num
        return f"({num}) / ({' * '.join(den_factor_text(f) for f in self.den)})"

    def same_value(self, other: "Coeff") -> bool:
        """Equality as rational functions (cross-multiplied, untruncated)."""
        return self.num * other.den_poly() == other.num * self.den_poly()


@dataclass(frozen=True)
class RelationTerm:
    side: str
    coeff: Coeff
    left: TauArgument
    right: TauArgument

    @property
    def num(self) -> TruncSeries:
        return self.coeff.num

    @property
    def den(self):
        return self.coeff.den

    def pair_key(self):
        """The unordered pair of tau arguments."""
        return tuple(sorted((self.left, self.right), key=_arg_sort_key))

    def signed_coeff(self) -> Coeff:
        return self.coeff if self.side == LHS else -self.coeff


def _arg_sort_key(a: TauArgument):
    return (a.n, a.nbar, a.t_shifts, a.tbar_shifts, a.base_t, a.base_tbar)


@dataclass(frozen=True)
class Relation:
    terms: Tuple[RelationTerm, ...]
    base: TauArgument
    label: str = ""
    meta: Tuple[Tuple[str, object], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))

    @property
    def lhs(self) -> List[RelationTerm]:
        return [t for t in self.terms if t.side == LHS]

    @property
    def rhs(self) -> List[RelationTerm]:
        return [t for t in self.terms if t.side == RHS]

    def meta_dict(self) -> dict:
        return dict(self.meta)

    def with_meta(self, **kw) -> "Relation":
        d = dict(self.meta)
        d.update(kw)
        return replace(self, meta=tuple(sorted(d.items())))

    def arguments(self) -> List[TauArgument]:
        out = []
        for t in self.terms:
            out.extend([t.left, t.right])
        return out

    def variables(self) -> set:
        out = set()
        for t in self.terms:
            out |= t.num.variables()
            for f in t.den:
                out |= set(f[1:])
            out |= t.left.variables() | t.right.variables()
        return out

    def is_cleared(self) -> bool:
        return all(not t.den for t in self.terms)


def clear_denominators(rel: Relation) -> Relation:
    """Multiply every term by the LCM of all denominator factors."""
    if rel.is_cleared():
        return rel
    lcm: Counter = Counter()
    for t in rel.terms:
        for f, k in Counter(t.den).items():
            lcm[f] = max(lcm[f], k)
    terms = []
    for t in rel.terms:
        have = Counter(t.den)
        num = t.num
        for f, k in lcm.items():
            for _ in range(k - have.get(f, 0)):
                num = num * den_factor_poly(f)
        terms.append(replace(t, coeff=Coeff(num, ())))
    return replace(rel, terms=tuple(terms))


def relation_window(rel: Relation, ctx: EvalContext) -> Window:
    """Smallest window covering the bound of every argument (or ctx.window)."""
    if ctx.window is not None:
        return ctx.window
    lo, hi = -1, 1
    for a in rel.arguments():
        w = window_bound(a, ctx)
        lo, hi = min(lo, w.j_min), max(hi, w.j_max)
    return Window(ctx.N, lo, hi)


class UnstableEvaluation(RuntimeError):
    pass


def residual(rel: Relation, ctx: EvalContext, window: Optional[Window] = None,
             check_stability: bool = False) -> TruncSeries:
    """sum_LHS c tau tau - sum_RHS c tau tau, exact through order D."""
    if not rel.is_cleared():
        raise ValueError("clear denominators before evaluating a residual")
    w = window or relation_window(rel, ctx)
    parts = []
    for t in rel.terms:
        a = tau_in_window(t.left, ctx, w)
        if a.is_zero():
            continue
        b = tau_in_window(t.right, ctx, w)
        if b.is_zero():
            continue
        parts.append(t.signed_coeff().num.with_order(ctx.D) * a * b)
    if check_stability:
        w2 = w.enlarged(1)
        for arg in rel.arguments():
            if tau_in_window(arg, ctx, w) != tau_in_window(arg, ctx, w2):
                raise UnstableEvaluation(f"window {w} too small for {shorthand(arg)}")
    out = TruncSeries.zero(ctx.D)
    for p in parts:
        out = out + p
    return out


def term_values(rel: Relation, ctx: EvalContext, window: Optional[Window] = None) -> List[TruncSeries]:
    """Each term's signed contribution; used to report nontriviality."""
    w = window or relation_window(rel, ctx)
    out = []
    for t in rel.terms:
        out.append(t.signed_coeff().num.with_order(ctx.D)
                   * tau_in_window(t.left, ctx, w) * tau_in_window(t.right, ctx, w))
    return out


# -- symbolic structure --------------------------------------------------------

def combined_terms(rel: Relation) -> Dict[tuple, Coeff]:
    """Signed coefficients summed per unordered argument pair (as LHS - RHS)."""
    out: Dict[tuple, Coeff] = {}
    for t in rel.terms:
        key = t.pair_key()
        c = t.signed_coeff()
        if key in out:
            prev = out[key]
            num = prev.num * c.den_poly() + c.num * prev.den_poly()
            out[key] = Coeff(num, tuple(sorted(prev.den + c.den)))
        else:
            out[key] = c
    return out


def is_symbolically_trivial(rel: Relation) -> bool:
    """True when all terms cancel pairwise as formal expressions."""
    return all(c.is_zero() for c in combined_terms(rel).values())


def same_terms(r1: Relation, r2: Relation, up_to_factor: bool = True):
    """Compare two relations as (LHS - RHS) term multisets.

    Returns the common ratio r2/r1 as a Coeff when every argument pair
    matches and the coefficient ratios agree (or None).  With
    ``up_to_factor=False`` the ratio must be exactly 1.
    """
    c1, c2 = combined_terms(r1), combined_terms(r2)
    c1 = {k: v for k, v in c1.items() if not v.is_zero()}
    c2 = {k: v for k, v in c2.items() if not v.is_zero()}
    if set(c1) != set(c2) or not c1:
        return None
    keys = sorted(c1, key=lambda k: tuple(_arg_sort_key(a) for a in k))
    k0 = keys[0]
    # ratio = c2[k0] / c1[k0]
    ratio = Coeff(c2[k0].num * c1[k0].den_poly(), ())
    ratio_den = c2[k0].den_poly() * c1[k0].num
    for k in keys:
        lhs = c2[k].num * c1[k].den_poly() * ratio_den
        rhs = ratio.num * c1[k].num * c2[k].den_poly()
        if lhs != rhs:
            return None
    if not up_to_factor and ratio.num != ratio_den:
        return None
    return (ratio.num, ratio_den)


# -- export ------------------------------------------------------------------

RELATION_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "RelationTerms",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["label", "side", "sign_coeff", "poly_coeff", "den_factors", "left_arg", "right_arg"],
        "properties": {
            "label": {"type": "string"},
            "side": {"enum": [LHS, RHS]},
            "sign_coeff": {"enum": [-1, 0, 1]},
            "poly_coeff": {"type": "string"},
            "den_factors": {"type": "array", "items": {"type": "string"}},
            "left_arg": {"type": "string"},
            "right_arg": {"type": "string"},
        },
    },
}


def export_records(rel: Relation) -> List[dict]:
    out = []
    for t in rel.terms:
        s = t.coeff.sign()
        poly = t.num if s >= 0 else -t.num
        out.append({"label": rel.label, "side": t.side, "sign_coeff": s,
                    "poly_coeff": poly.to_text(),
                    "den_factors": [den_factor_text(f) for f in t.den],
                    "left_arg": shorthand(t.left, rel.base),
                    "right_arg": shorthand(t.right, rel.base)})
    return out


def relation_text(rel: Relation) -> str:
    lines = [f"{rel.label}:"]
    for side in (LHS, RHS):
        terms = [t for t in rel.terms if t.side == side]
        if not terms and side == RHS:
            lines.append("  = 0")
            continue
        for i, t in enumerate(terms):
            lead = "  " if side == LHS else "  "
            op = ("= " if i == 0 else "+ ") if side == RHS else ("  " if i == 0 else "+ ")
            lines.append(f"{lead}{op}[{t.coeff.to_text()}] "
                         f"{shorthand(t.left, rel.base)} {shorthand(t.right, rel.base)}")
    return "\n".join(lines)
