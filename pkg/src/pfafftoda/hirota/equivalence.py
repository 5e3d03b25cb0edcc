"""Term-map equivalences between relations: a global translation of the
base arguments plus multiplication by a constant coefficient."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, replace
from typing import Dict, Optional, Sequence, Tuple

from ..fock import unit, vadd, vneg
from ..series import TruncSeries
from ..taueval import TauArgument, _expand
from .genhm import Scheme, build_genHM, e_coeff, slot_vars
from .relation import Coeff, Relation, same_terms


@dataclass(frozen=True)
class Translation:
    dn: Tuple[int, ...]
    dnbar: Tuple[int, ...]
    dt: Tuple[Tuple[int, str, int], ...]
    dtbar: Tuple[Tuple[int, str, int], ...]

    def apply(self, a: TauArgument) -> TauArgument:
        return a.shifted(self.dn, self.dnbar, _expand(self.dt), _expand(self.dtbar))

    def describe(self) -> str:
        def sh(d):
            return " ".join(f"{'+' if k > 0 else '-'}{abs(k) if abs(k) > 1 else ''}[{v}]_{g}" for g, v, k in d) or "0"
        return f"n += {list(self.dn)}, nbar += {list(self.dnbar)}, t += {sh(self.dt)}, tbar += {sh(self.dtbar)}"


def _diff_shifts(x, y):
    c = Counter({(g, v): k for g, v, k in x})
    for g, v, k in y:
        c[(g, v)] -= k
    return tuple(sorted((g, v, k) for (g, v), k in c.items() if k))


def translation_between(a: TauArgument, b: TauArgument) -> Translation:
    """The translation taking argument a to argument b."""
    return Translation(vadd(b.n, vneg(a.n)), vadd(b.nbar, vneg(a.nbar)),
                       _diff_shifts(b.t_shifts, a.t_shifts), _diff_shifts(b.tbar_shifts, a.tbar_shifts))


def translate(rel: Relation, tr: Translation) -> Relation:
    terms = tuple(replace(t, left=tr.apply(t.left), right=tr.apply(t.right)) for t in rel.terms)
    return replace(rel, terms=terms, base=tr.apply(rel.base))


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    translation: Optional[Translation] = None
    ratio: Optional[Tuple[TruncSeries, TruncSeries]] = None

    def describe(self) -> str:
        if not self.equivalent:
            return "no term map found"
        num, den = self.ratio
        return f"{self.translation.describe()}; factor ({num.to_text()}) / ({den.to_text()})"


def find_term_map(r1: Relation, r2: Relation) -> EquivalenceResult:
    """Search translations aligning an argument of r1 with any argument of r2."""
    if not r1.terms or not r2.terms:
        return EquivalenceResult(False)
    anchor = r1.terms[0].left
    seen = set()
    for t in r2.terms:
        for b in (t.left, t.right):
            tr = translation_between(anchor, b)
            if tr in seen:
                continue
            seen.add(tr)
            ratio = same_terms(translate(r1, tr), r2)
            if ratio is not None:
                return EquivalenceResult(True, tr, ratio)
    return EquivalenceResult(False)


def ratio_equals(ratio: Tuple[TruncSeries, TruncSeries], c: Coeff, up_to_sign: bool = False) -> bool:
    num, den = ratio
    lhs = num * c.den_poly()
    rhs = c.num * den
    return lhs == rhs or (up_to_sign and lhs == -rhs)


# -- the documented equivalences ----------------------------------------------

def _scheme(sig: Sequence[int], indices: Sequence[int]) -> Scheme:
    it = iter(indices)
    slots = [tuple(next(it) for _ in range(k)) for k in sig]
    return Scheme(*slots)


def genhm_for(sig: Sequence[int], indices: Sequence[int], base: TauArgument) -> Relation:
    """genHM with points a, b, c, d and indices assigned in slot order."""
    s = _scheme(sig, indices)
    return build_genHM(s, slot_vars(s), base)


def _base(N: int) -> TauArgument:
    return TauArgument.make(tuple([0] * N), tuple([0] * N))


def equivalence_2110_3001(indices: Sequence[int], vars: Sequence[str] = ("a", "b", "c", "d")) -> bool:
    """(3,0|0,1) multiplied by E_{al nu}(c, a) E_{be nu}(c, b) and shifted by
    (n, t) -> (n + e_nu, t + [c]_nu), (nbar, tbar) -> (nbar - e_mu, tbar - [d]_mu)
    has the same terms as (2,1|1,0)."""
    al, be, nu, mu = indices
    N = max(max(indices), 1)
    a, b, c, d = vars
    base = _base(N)
    s3001 = Scheme((al, be, nu), (), (), (mu,))
    s2110 = Scheme((al, be), (nu,), (mu,), ())
    r3001 = build_genHM(s3001, {"Lp": (a, b, c), "Rm": (d,)}, base)
    r2110 = build_genHM(s2110, {"Lp": (a, b), "Lm": (c,), "Rp": (d,)}, base)
    tr = Translation(unit(N, nu, 1), unit(N, mu, -1), ((nu, c, 1),), ((mu, d, -1),))
    ratio = same_terms(translate(r3001, tr), r2110)
    if ratio is None:
        return False
    return ratio_equals(ratio, e_coeff(al, nu, c, a) * e_coeff(be, nu, c, b), up_to_sign=True)


DOCUMENTED_PAIRS = (
    ((2, 1, 1, 0), (3, 0, 0, 1)),
    ((2, 1, 0, 1), (3, 0, 1, 0)),
    ((2, 0, 0, 2), (2, 0, 2, 0)),
    ((1, 1, 1, 1), (2, 0, 2, 0)),
)


def scheme_equivalence(sig_a: Sequence[int], sig_b: Sequence[int], indices: Sequence[int]) -> EquivalenceResult:
    N = max(indices)
    return find_term_map(genhm_for(sig_a, indices, _base(N)), genhm_for(sig_b, indices, _base(N)))


CANONICAL_SIGNATURES = ((3, 0, 1, 0), (3, 0, 0, 1), (2, 0, 2, 0), (2, 0, 1, 1))


def collapse_to_canonical(sigs: Sequence[Sequence[int]], indices: Sequence[int]) -> Dict[tuple, Optional[tuple]]:
    """Map each signature to the canonical signature it is term-equivalent to."""
    out = {}
    for s in sigs:
        out[tuple(s)] = None
        for c in CANONICAL_SIGNATURES:
            if scheme_equivalence(s, c, indices).equivalent:
                out[tuple(s)] = c
                break
    return out
