"""A small token language for relations written in the shifted-argument
shorthand, plus single-token edits (used for emendation search and
mutation tests).

An argument is four space-separated token lists (n, nbar, t, tbar):
charge tokens are index names ("al", "-be"), time tokens are
"<var>_<index>" with an optional leading "-" ("b_al", "-d_mu").

Coefficient tokens (multiplied together), with eps_x = 1/x:
  "1", "-1"          signs
  "a"                 the point a itself, 1/eps_a
  "a-b"               a - b = (eps_b - eps_a) / (eps_a eps_b)
  "ia-ib"             1/a - 1/b
  "ia", "iab"         1/a and 1/(ab)
  "e(al,be)"          +1 if al <= be else -1
  "e(al,be,nu)"       e(al,be) e(be,nu) e(nu,al)
  "d(al,be)[ia-ib]"   (1/a - 1/b) if al == be else 1
"""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..currents import MiwaShiftSpec
from ..fock import unit, vadd
from ..taueval import TauArgument
from .relation import LHS, RHS, Coeff, Relation, RelationTerm

INDEX_NAMES = ("al", "be", "nu", "mu")
VAR_NAMES = ("a", "b", "c", "d")

_E2 = re.compile(r"^e\((\w+),(\w+)\)$")
_E3 = re.compile(r"^e\((\w+),(\w+),(\w+)\)$")
_D = re.compile(r"^d\((\w+),(\w+)\)\[i(\w)-i(\w)\]$")
_DIFF = re.compile(r"^(\w)-(\w)$")
_IDIFF = re.compile(r"^i(\w)-i(\w)$")
_TIME = re.compile(r"^(-?)(\w)_(\w+)$")
_CHARGE = re.compile(r"^(-?)(\w+)$")


@dataclass(frozen=True)
class ArgSpec:
    n: Tuple[str, ...] = ()
    nbar: Tuple[str, ...] = ()
    t: Tuple[str, ...] = ()
    tbar: Tuple[str, ...] = ()

    FIELDS = ("n", "nbar", "t", "tbar")

    @classmethod
    def parse(cls, n: str = "", nbar: str = "", t: str = "", tbar: str = "") -> "ArgSpec":
        return cls(tuple(n.split()), tuple(nbar.split()), tuple(t.split()), tuple(tbar.split()))

    def text(self) -> str:
        return "(" + "; ".join(" ".join(getattr(self, f)) for f in self.FIELDS) + ")"


@dataclass(frozen=True)
class TermSpec:
    side: str
    coeff: Tuple[str, ...]
    left: ArgSpec
    right: ArgSpec

    def text(self) -> str:
        return f"{self.side} [{' '.join(self.coeff)}] {self.left.text()} {self.right.text()}"


@dataclass(frozen=True)
class RelationSpec:
    label: str
    terms: Tuple[TermSpec, ...]
    family: str = ""
    variant: str = "printed"

    def text(self) -> str:
        return "\n".join([f"{self.label} ({self.variant})"] + ["  " + t.text() for t in self.terms])

    def index_names(self) -> List[str]:
        out = set()
        for tok, kind in iter_tokens(self):
            if kind in ("n", "nbar"):
                out.add(tok.lstrip("-"))
            elif kind in ("t", "tbar"):
                out.add(_TIME.match(tok).group(3))
            else:
                for m in (_E2, _E3, _D):
                    mm = m.match(tok)
                    if mm:
                        out.update(g for g in mm.groups()[:3 if m is _E3 else 2])
        return sorted(out, key=INDEX_NAMES.index)


def T(side: str, coeff: str, left: Sequence[str], right: Sequence[str]) -> TermSpec:
    """Term shorthand: side "L" or "R", coefficient tokens, two 4-tuples of token strings."""
    return TermSpec(LHS if side == "L" else RHS, tuple(coeff.split()),
                    ArgSpec.parse(*left), ArgSpec.parse(*right))


def iter_tokens(spec: RelationSpec) -> Iterator[Tuple[str, str]]:
    for t in spec.terms:
        for tok in t.coeff:
            yield tok, "coeff"
        for arg in (t.left, t.right):
            for f in ArgSpec.FIELDS:
                for tok in getattr(arg, f):
                    yield tok, f


# -- evaluation --------------------------------------------------------------

def coeff_token(tok: str, idx: Dict[str, int], var: Dict[str, str]) -> Coeff:
    if tok == "1":
        return Coeff.one()
    if tok == "-1":
        return Coeff.const(-1)
    m = _E3.match(tok)
    if m:
        x, y, z = (idx[g] for g in m.groups())
        s = (1 if x <= y else -1) * (1 if y <= z else -1) * (1 if z <= x else -1)
        return Coeff.const(s)
    m = _E2.match(tok)
    if m:
        x, y = (idx[g] for g in m.groups())
        return Coeff.const(1 if x <= y else -1)
    m = _D.match(tok)
    if m:
        p, q, u, v = m.groups()
        return Coeff.diff(var[u], var[v]) if idx[p] == idx[q] else Coeff.one()
    m = _IDIFF.match(tok)
    if m:
        return Coeff.diff(var[m.group(1)], var[m.group(2)])
    m = _DIFF.match(tok)
    if m:
        u, v = var[m.group(1)], var[m.group(2)]
        return Coeff.diff(v, u) * Coeff.inv_var(u) * Coeff.inv_var(v)
    if tok.startswith("i") and len(tok) > 1 and all(ch in var for ch in tok[1:]):
        c = Coeff.one()
        for ch in tok[1:]:
            c = c * Coeff.var(var[ch])
        return c
    if tok in var:
        return Coeff.inv_var(var[tok])
    raise ValueError(f"unknown coefficient token {tok!r}")


def _charge(tokens, idx, N):
    v = tuple([0] * N)
    for tok in tokens:
        m = _CHARGE.match(tok)
        if not m or m.group(2) not in idx:
            raise ValueError(f"bad charge token {tok!r}")
        v = vadd(v, unit(N, idx[m.group(2)], -1 if m.group(1) else 1))
    return v


def _times(tokens, idx, var):
    out = []
    for tok in tokens:
        m = _TIME.match(tok)
        if not m or m.group(3) not in idx or m.group(2) not in var:
            raise ValueError(f"bad time token {tok!r}")
        out.append(MiwaShiftSpec(-1 if m.group(1) else 1, idx[m.group(3)], var[m.group(2)]))
    return out


def eval_arg(a: ArgSpec, base: TauArgument, idx: Dict[str, int], var: Dict[str, str]) -> TauArgument:
    N = base.N
    return base.shifted(dn=_charge(a.n, idx, N), dnbar=_charge(a.nbar, idx, N),
                        t_shifts=_times(a.t, idx, var), tbar_shifts=_times(a.tbar, idx, var))


def build_from_spec(spec: RelationSpec, indices: Sequence[int], base: TauArgument,
                    vars: Sequence[str] = VAR_NAMES) -> Relation:
    """Evaluate a spec with index names al, be, nu, mu bound to ``indices``."""
    idx = dict(zip(INDEX_NAMES, indices))
    var = dict(zip(VAR_NAMES, vars))
    for i in idx.values():
        if not 1 <= i <= base.N:
            raise ValueError(f"index {i} outside 1..{base.N}")
    terms = []
    for t in spec.terms:
        c = Coeff.one()
        for tok in t.coeff:
            c = c * coeff_token(tok, idx, var)
        terms.append(RelationTerm(t.side, c, eval_arg(t.left, base, idx, var),
                                  eval_arg(t.right, base, idx, var)))
    rel = Relation(tuple(terms), base, spec.label)
    return rel.with_meta(variant=spec.variant, indices=str(tuple(indices)))


def base_parity(spec: RelationSpec) -> int:
    """Parity of |n| - |nbar| a base needs for the first term's left factor to be allowed."""
    a = spec.terms[0].left
    return (len(a.n) - len(a.nbar)) % 2


# -- single-token edits ------------------------------------------------------

@dataclass(frozen=True)
class Edit:
    term: int
    where: str          # "coeff" or "left.<field>" / "right.<field>"
    position: int       # token position (insert position for inserts)
    old: Optional[str]  # None for insert
    new: Optional[str]  # None for delete

    def describe(self, spec: RelationSpec) -> str:
        side = spec.terms[self.term].side
        loc = f"term {self.term + 1} ({side}) {self.where}"
        if self.old is None:
            return f"{loc}: insert {self.new!r}"
        if self.new is None:
            return f"{loc}: delete {self.old!r}"
        return f"{loc}: {self.old!r} -> {self.new!r}"


def apply_edit(spec: RelationSpec, e: Edit, variant: str = "emended") -> RelationSpec:
    term = spec.terms[e.term]
    if e.where == "coeff":
        toks = list(term.coeff)
    else:
        which, f = e.where.split(".")
        toks = list(getattr(getattr(term, which), f))
    if e.old is None:
        toks.insert(e.position, e.new)
    else:
        if toks[e.position] != e.old:
            raise ValueError(f"edit does not match: {toks[e.position]!r} != {e.old!r}")
        if e.new is None:
            del toks[e.position]
        else:
            toks[e.position] = e.new
    if e.where == "coeff":
        term = replace(term, coeff=tuple(toks))
    else:
        which, f = e.where.split(".")
        term = replace(term, **{which: replace(getattr(term, which), **{f: tuple(toks)})})
    terms = list(spec.terms)
    terms[e.term] = term
    return replace(spec, terms=tuple(terms), variant=variant)


def candidate_edits(spec: RelationSpec, indices: Sequence[str] = ("al", "be"),
                    vars: Sequence[str] = ("a", "b")) -> List[Edit]:
    """Every single-token replacement, deletion or insertion over a small alphabet."""
    charge_alpha = [p + i for i in indices for p in ("", "-")]
    time_alpha = [p + f"{v}_{i}" for v in vars for i in indices for p in ("", "-")]
    coeff_alpha = ["-1"] + list(vars) + [f"{vars[0]}-{vars[1]}", f"i{vars[0]}-i{vars[1]}",
                                         f"i{vars[0]}", f"i{vars[1]}", f"i{''.join(vars)}",
                                         f"e({indices[0]},{indices[1]})"]
    out = []
    for ti, term in enumerate(spec.terms):
        places = [("coeff", term.coeff, coeff_alpha)]
        for which in ("left", "right"):
            arg = getattr(term, which)
            for f in ArgSpec.FIELDS:
                alpha = charge_alpha if f in ("n", "nbar") else time_alpha
                places.append((f"{which}.{f}", getattr(arg, f), alpha))
        for where, toks, alpha in places:
            for p, tok in enumerate(toks):
                out.append(Edit(ti, where, p, tok, None))
                for new in alpha:
                    if new != tok:
                        out.append(Edit(ti, where, p, tok, new))
            for new in alpha:
                out.append(Edit(ti, where, len(toks), None, new))
    return out


# -- mutations (negative controls) --------------------------------------------

def mutation_edits(spec: RelationSpec) -> List[Tuple[str, Edit]]:
    """Sign flips of e(...) tokens, toggles of delta exponents, and flips of
    single charge shifts."""
    out = []
    for ti, term in enumerate(spec.terms):
        for p, tok in enumerate(term.coeff):
            if tok.startswith("e("):
                # an extra -1 next to the sign token flips it
                out.append(("sign", Edit(ti, "coeff", p + 1, None, "-1")))
            m = _D.match(tok)
            if m:
                uv = m.group(3, 4)
                # toggled exponent: always / never include the difference factor
                out.append(("delta", Edit(ti, "coeff", p, tok, f"i{uv[0]}-i{uv[1]}")))
                out.append(("delta", Edit(ti, "coeff", p, tok, None)))
        for which in ("left", "right"):
            arg = getattr(term, which)
            for f in ("n", "nbar"):
                for p, tok in enumerate(getattr(arg, f)):
                    flipped = tok[1:] if tok.startswith("-") else "-" + tok
                    out.append(("charge", Edit(ti, f"{which}.{f}", p, tok, flipped)))
    return out
