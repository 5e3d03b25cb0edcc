"""Catalog of canonical 4-point relations and 2-point relations in the
shifted-argument shorthand, with documented emendation variants."""
from __future__ import annotations

from typing import Dict, List, Optional, Sequence, Tuple

from ..taueval import TauArgument
from .dsl import Edit, RelationSpec, T, apply_edit, build_from_spec
from .relation import Relation, is_symbolically_trivial

_ = ""

# -- canonical 4-point relations (all terms are LHS unless marked R) ----------

_C123 = "e(al,be,nu) d(al,be)[ib-ia] d(be,nu)[ic-ib] d(nu,al)[ia-ic]"

FOURPOINT_KINDS = ("3010", "3001", "2020", "2011")

_FOUR: Dict[str, Tuple[RelationSpec, ...]] = {
    "3010": (RelationSpec("3010", (
        T("L", "e(be,nu) d(be,nu)[ic-ib]", ("be nu", "mu", "b_be c_nu", "d_mu"), ("al", _, "a_al", _)),
        T("L", "e(nu,al) d(nu,al)[ia-ic]", ("nu al", "mu", "c_nu a_al", "d_mu"), ("be", _, "b_be", _)),
        T("L", "e(al,be) d(al,be)[ib-ia]", ("al be", "mu", "a_al b_be", "d_mu"), ("nu", _, "c_nu", _)),
        T("L", _C123, ("al be nu", _, "a_al b_be c_nu", _), (_, "mu", _, "d_mu")),
    ), "4pt"),),
    "3001": (RelationSpec("3001", (
        T("L", "e(be,nu) d(be,nu)[ic-ib]", ("be nu", _, "b_be c_nu", _), ("al", "mu", "a_al", "d_mu")),
        T("L", "e(nu,al) d(nu,al)[ia-ic]", ("nu al", _, "c_nu a_al", _), ("be", "mu", "b_be", "d_mu")),
        T("L", "e(al,be) d(al,be)[ib-ia]", ("al be", _, "a_al b_be", _), ("nu", "mu", "c_nu", "d_mu")),
        T("L", _C123, ("al be nu", "mu", "a_al b_be c_nu", "d_mu"), (_, _, _, _)),
    ), "4pt"),),
    "2020": (
        RelationSpec("2020", (
            T("L", "e(mu,nu) d(nu,mu)[ic-id]", ("be", "nu mu", "b_be", "c_nu d_mu"), ("al", _, "a_al", _)),
            T("L", "-1 e(mu,nu) d(nu,mu)[ic-id]", ("al", "nu mu", "a_al", "c_nu d_mu"), ("be", _, "b_be", _)),
            T("R", "e(be,al) d(al,be)[ia-ib]", ("al be", "mu", "a_al b_be", "d_mu"), (_, "nu", _, "c_nu")),
            T("R", "-1 e(be,al) d(al,be)[ia-ib]", ("al be", "nu", "a_al b_be", "c_nu d_mu"),
              ("be", _, "a_al b_be", "c_nu")),
        ), "4pt", "printed"),
        RelationSpec("2020", (
            T("L", "e(mu,nu) d(nu,mu)[ic-id]", ("be", "nu mu", "b_be", "c_nu d_mu"), ("al", _, "a_al", _)),
            T("L", "-1 e(mu,nu) d(nu,mu)[ic-id]", ("al", "nu mu", "a_al", "c_nu d_mu"), ("be", _, "b_be", _)),
            T("R", "e(be,al) d(al,be)[ia-ib]", ("al be", "mu", "a_al b_be", "d_mu"), (_, "nu", _, "c_nu")),
            T("R", "-1 e(be,al) d(al,be)[ia-ib]", ("al be", "nu", "a_al b_be", "c_nu"), (_, "mu", _, "d_mu")),
        ), "4pt", "corrected"),
    ),
    "2011": (RelationSpec("2011", (
        T("L", "1", ("be", "nu", "b_be", "c_nu"), ("al", "mu", "a_al", "d_mu")),
        T("L", "-1", ("al", "nu", "a_al", "c_nu"), ("be", "mu", "b_be", "d_mu")),
        T("R", "e(be,al) e(mu,nu) d(al,be)[ia-ib] d(nu,mu)[ic-id]", ("al be", _, "a_al b_be", _),
          (_, "nu mu", _, "c_nu d_mu")),
        T("R", "-1 e(be,al) e(mu,nu) d(al,be)[ia-ib] d(nu,mu)[ic-id]", ("al be", "nu mu", "a_al b_be", "c_nu d_mu"),
          (_, _, _, _)),
    ), "4pt"),),
}


def fourpoint_spec(kind: str, variant: Optional[str] = None) -> RelationSpec:
    """The canonical 4-point relation; ``variant`` picks printed/corrected
    where the printed form differs from the derived one."""
    if kind not in _FOUR:
        raise KeyError(f"unknown 4-point kind {kind!r}; expected one of {FOURPOINT_KINDS}")
    specs = _FOUR[kind]
    if variant is None:
        return specs[-1]
    for s in specs:
        if s.variant == variant:
            return s
    raise KeyError(f"{kind} has no variant {variant!r}")


def fourpoint_variants(kind: str) -> List[str]:
    return [s.variant for s in _FOUR[kind]]


def build_canonical_4pt(kind: str, indices: Sequence[int], base: TauArgument,
                        vars: Sequence[str] = ("a", "b", "c", "d"), variant: Optional[str] = None) -> Relation:
    """Build the relation and flag it when its terms cancel identically."""
    rel = build_from_spec(fourpoint_spec(kind, variant), indices, base, vars)
    return rel.with_meta(trivial=is_symbolically_trivial(rel))


# -- two-point relations -----------------------------------------------------

_TWO: List[RelationSpec] = [
    # family A
    RelationSpec("eq1-1a", (
        T("L", "a", ("al", "al", "b_al", _), (_, _, "a_al", _)),
        T("L", "-1 b", ("al", "al", "a_al", _), (_, _, "b_al", _)),
        T("R", "a-b", ("al", "al", "a_al b_al", _), (_, _, _, _)),
        T("R", "ia-ib", ("al al", _, "a_al b_al", _), ("-al", "al", _, _)),
    ), "A"),
    RelationSpec("eq2odd-1a", (
        T("L", "a", ("al", "be", "b_al", _), (_, _, "a_al", _)),
        T("L", "-1 b", ("al", "be", "a_al", _), (_, _, "b_al", _)),
        T("R", "a-b", ("al", "be", "a_al b_al", _), (_, _, _, _)),
        T("R", "ia-ib", ("al al", _, "a_al b_al", _), ("-al", "be", _, _)),
    ), "A"),
    RelationSpec("eq2odd-5a", (
        T("L", "1", ("be", "al", "a_al", _), (_, _, "b_al", _)),
        T("L", "-1", ("be", "al", "b_al", _), (_, _, "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al be", _, "a_al b_al", _), ("-al", "al", _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", "al", "a_al b_al", _), ("be -al", _, _, _)),
    ), "A"),
    RelationSpec("eq2odd-6a", (
        T("L", "1", ("be", "be", "a_al", _), (_, _, "b_al", _)),
        T("L", "-1", ("be", "be", "b_al", _), (_, _, "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al be", _, "a_al b_al", _), ("-al", "be", _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", "be", "a_al b_al", _), ("be -al", _, _, _)),
    ), "A"),
    RelationSpec("eq3odd-1a", (
        T("L", "1", ("be", "al", "b_be", _), (_, _, "a_al", _)),
        T("L", "-1", ("be", "al", "a_al b_be", _), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "al", "a_al", _), ("be -al", _, "b_be", _)),
        T("R", "-1 e(al,be) ia", ("al be", _, "a_al b_be", _), ("-al", "al", _, _)),
    ), "A"),
    RelationSpec("eq3odd-2a", (
        T("L", "1", ("be", "be", "b_be", _), (_, _, "a_al", _)),
        T("L", "-1", ("be", "be", "a_al b_be", _), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "be", "a_al", _), ("be -al", _, "b_be", _)),
        T("R", "-1 e(al,be) ia", ("al be", _, "a_al b_be", _), ("-al", "be", _, _)),
    ), "A"),
    RelationSpec("eq4odd-1a", (
        T("L", "1", ("be", "al", _, "b_al"), (_, _, "a_al", _)),
        T("L", "-1", ("be", "al", "a_al", "b_al"), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "al", "a_al", "b_al"), ("be -al", _, _, _)),
        T("R", "-1 e(al,be) ia", ("al be", _, "a_al", _), ("-al", "al", _, "b_al")),
    ), "A"),
    RelationSpec("eq5odd-1a", (
        T("L", "1", ("be", "be", _, "b_be"), (_, _, "a_al", _)),
        T("L", "-1", ("be", "be", "a_al", "b_be"), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "be", "a_al", "b_be"), ("be -al", _, _, _)),
        T("R", "-1 e(al,be) ia", ("al be", _, "a_al", _), ("-al", "be", _, "b_be")),
    ), "A"),
    # family B
    RelationSpec("eq1-2a", (
        T("L", "a", ("al", _, "b_al", _), (_, "al", "a_al", _)),
        T("L", "-1 b", ("al", _, "a_al", _), (_, "al", "b_al", _)),
        T("R", "a-b", ("al", _, "a_al b_al", _), (_, "al", _, _)),
        T("R", "ia-ib", ("al al", "al", "a_al b_al", _), ("-al", _, _, _)),
    ), "B"),
    RelationSpec("eq2odd-2a", (
        T("L", "a", ("al", _, "b_al", _), (_, "be", "a_al", _)),
        T("L", "-1 b", ("al", _, "a_al", _), (_, "be", "b_al", _)),
        T("R", "a-b", ("al", _, "a_al b_al", _), (_, "be", _, _)),
        T("R", "ia-ib", ("al al", "be", "a_al b_al", _), ("-al", _, _, _)),
    ), "B"),
    RelationSpec("eq2odd-8a", (
        T("L", "1", ("be", _, "a_al", _), (_, "al", "b_al", _)),
        T("L", "-1", ("be", _, "b_al", _), (_, "al", "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al be", "al", "a_al b_al", _), ("-al", _, _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", _, "a_al b_al", _), ("be -al", "al", _, _)),
    ), "B"),
    RelationSpec("eq2odd-7a", (
        T("L", "1", ("be", _, "a_al", _), (_, "be", "b_al", _)),
        T("L", "-1", ("be", _, "b_al", _), (_, "be", "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al be", "be", "a_al b_al", _), ("-al", _, _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", _, "a_al b_al", _), ("be -al", "be", _, _)),
    ), "B"),
    RelationSpec("eq3odd-4a", (
        T("L", "1", ("be", _, "b_be", _), (_, "al", "a_al", _)),
        T("L", "-1", ("be", _, "a_al b_be", _), (_, "al", _, _)),
        T("R", "e(al,be) ia", ("al", _, "a_al", _), ("be -al", "al", "b_be", _)),
        T("R", "-1 e(al,be) ia", ("al be", "al", "a_al b_be", _), ("-al", _, _, _)),
    ), "B"),
    RelationSpec("eq3odd-3a", (
        T("L", "1", ("be", _, "b_be", _), (_, "be", "a_al", _)),
        T("L", "-1", ("be", _, "a_al b_be", _), (_, "be", _, _)),
        T("R", "e(al,be) ia", ("al", _, "a_al", _), ("be -al", "be", "b_be", _)),
        T("R", "-1 e(al,be) ia", ("al be", "be", "a_al b_be", _), ("-al", _, _, _)),
    ), "B"),
    RelationSpec("eq4odd-2a", (
        T("L", "1", ("be", _, "a_al", _), (_, "al", _, "b_al")),
        T("L", "-1", ("be", _, _, _), (_, "al", "a_al", "b_al")),
        T("R", "e(al,be) ia", ("al be", "al", "a_al", "b_al"), ("-al", _, _, _)),
        T("R", "-1 e(al,be) ia", ("al", _, "a_al", _), ("be -al", "al", _, "b_al")),
    ), "B"),
    RelationSpec("eq5odd-2a", (
        T("L", "1", ("be", _, "a_al", _), (_, "be", _, "b_be")),
        T("L", "-1", ("be", _, _, _), (_, "be", "a_al", "b_al")),
        T("R", "e(al,be)", ("al be", "be", "a_al", "b_al"), ("-al", _, _, _)),
        T("R", "-1 e(al,be)", ("al", _, "a_al", _), ("be -al", "be", _, "b_be")),
    ), "B"),
    # family C
    RelationSpec("eq3-01a", (
        T("L", "a", (_, "al", _, "b_al"), (_, "-al", "a_al", _)),
        T("L", "-1 a", (_, "al", "a_al", "b_al"), (_, "-al", _, _)),
        T("R", "b", ("al", _, "a_al", _), ("-al", _, _, "b_al")),
        T("R", "-1 b", ("al", _, "a_al", "b_al"), ("-al", _, _, _)),
    ), "C"),
    RelationSpec("eq4even-1a", (
        T("L", "1", (_, "al be", _, "b_al"), (_, _, "a_al", _)),
        T("L", "-1", (_, "al be", "a_al", "b_al"), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "al", "a_al", "b_al"), ("-al", "be", _, _)),
        T("R", "-1 e(al,be) ia", ("al", "be", "a_al", _), ("-al", "al", _, "b_al")),
    ), "C"),
    RelationSpec("eq4even-3a", (
        T("L", "1", ("al", "al be", "a_al", "b_be"), ("be", _, _, _)),
        T("L", "-1", ("al be", "al", "a_al", "b_al"), (_, "be", _, _)),
        T("R", "1", ("be", "al be", _, "b_al"), ("al", _, "a_al", _)),
        T("R", "-1", ("al be", "be", "a_al", _), (_, "al", _, "b_al")),
    ), "C"),
    RelationSpec("eq5even-1a", (
        T("L", "1", (_, "al be", _, "b_be"), (_, _, "a_al", _)),
        T("L", "-1", (_, "al be", "a_al", "b_be"), (_, _, _, _)),
        T("R", "e(al,be) ia", ("al", "al", "a_al", _), ("-al", "be", _, "b_be")),
        T("R", "-1 e(al,be) ia", ("al", "be", "a_al", "b_be"), ("-al", "al", _, _)),
    ), "C"),
    RelationSpec("eq5even-2a", (
        T("L", "a", (_, "be", _, "b_be"), (_, "-be", "a_al", _)),
        T("L", "-1 a", (_, "be", "a_al", "b_al"), (_, "-be", _, _)),
        T("R", "b", ("al", _, "a_al", _), ("-al", _, _, "b_be")),
        T("R", "-1 b", ("al", _, "a_al", "b_al"), ("-al", _, _, _)),
    ), "C"),
    RelationSpec("eq5even-5a", (
        T("L", "1", ("al", "al be", "a_al", "b_be"), ("be", _, _, _)),
        T("L", "-1", ("be", "al be", _, "b_al"), ("al", _, "a_al", _)),
        T("R", "1", ("al be", "al", "a_al", _), (_, "be", _, "b_be")),
        T("R", "-1", ("al be", "be", "a_al", "b_be"), (_, "al", _, _)),
    ), "C"),
    RelationSpec("eq2even-1a", (
        T("L", "1", (_, "al be", "a_al", _), (_, _, "b_al", _)),
        T("L", "-1", (_, "al be", "b_al", _), (_, _, "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al", "be", "a_al b_al", _), ("-al", "al", _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", "al", "a_al b_al", _), ("-al", "be", _, _)),
    ), "C"),
    RelationSpec("eq3even-1a", (
        T("L", "1", ("al", "al be", "a_al", _), ("be", _, "b_be", _)),
        T("L", "-1", ("be", "al be", "b_be", _), ("al", _, "a_al", _)),
        T("R", "1", ("al be", "al", "a_al b_be", _), (_, "be", _, _)),
        T("R", "-1", ("al be", "be", "a_al b_be", _), (_, "al", _, _)),
    ), "C"),
    # family D
    RelationSpec("eq3-02a", (
        T("L", "1", (_, _, "a_al", _), (_, _, _, "b_al")),
        T("L", "-1", (_, _, _, _), (_, _, "a_al", "b_al")),
        T("R", "iab", ("al", "-al", "a_al", _), ("-al", "al", _, "b_al")),
        T("R", "-1 iab", ("al", "al", "a_al", "b_al"), ("-al", "-al", _, _)),
    ), "D"),
    RelationSpec("eq4even-2a", (
        T("L", "1", (_, "be", "a_al", _), (_, "al", _, "b_al")),
        T("L", "-1", (_, "be", _, _), (_, "al", "a_al", "b_al")),
        T("R", "e(al,be) ia", ("al", "al be", "a_al", "b_al"), ("-al", _, _, _)),
        T("R", "-1 e(al,be) ia", ("al", _, "a_al", _), ("-al", "al be", _, "b_al")),
    ), "D"),
    RelationSpec("eq4even-4a", (
        T("L", "1", ("be", "be", _, _), ("al", "al", "a_al", "b_al")),
        T("L", "-1", ("al be", "al be", "a_al", "b_al"), (_, _, _, _)),
        T("R", "1", ("al", "be", "a_al", _), ("be", "al", _, "b_al")),
        T("R", "-1", ("al be", _, "a_al", _), (_, "al be", _, "b_al")),
    ), "D"),
    RelationSpec("eq5even-4a", (
        T("L", "1", (_, "al", "a_al", _), (_, "be", _, "b_be")),
        T("L", "-1", (_, "al", _, _), (_, "be", "a_al", "b_al")),
        T("R", "e(al,be) ia", ("al", _, "a_al", _), ("-al", "al be", _, "b_be")),
        T("R", "-1 e(al,be) ia", ("al", "al be", "a_al", "b_be"), ("-al", _, _, _)),
    ), "D"),
    RelationSpec("eq5even-7a", (
        T("L", "1", ("al", "al", "a_al", _), ("be", "be", _, "b_be")),
        T("L", "-1", ("be", "al", _, _), ("al", "be", "a_al", "b_be")),
        T("R", "1", ("al be", "al be", "a_al", "b_be"), (_, _, _, _)),
        T("R", "-1", ("al be", _, "a_al", _), (_, "al be", _, "b_be")),
    ), "D"),
    RelationSpec("eq5even-3a", (
        T("L", "1", (_, _, "a_al", _), (_, _, _, "b_be")),
        T("L", "-1", (_, _, _, _), (_, _, "a_al", "b_be")),
        T("R", "iab", ("al", "-be", "a_al", _), ("-al", "be", _, "b_be")),
        T("R", "-1 iab", ("al", "be", "a_al", "b_be"), ("-al", "-be", _, _)),
    ), "D"),
    RelationSpec("eq2even-2a", (
        T("L", "1", (_, "al", "a_al", _), (_, "be", "b_al", _)),
        T("L", "-1", (_, "al", "b_al", _), (_, "be", "a_al", _)),
        T("R", "e(al,be) ia-ib", ("al", _, "a_al b_al", _), ("-al", "al be", _, _)),
        T("R", "-1 e(al,be) ia-ib", ("al", "al be", "a_al b_al", _), ("-al", _, _, _)),
    ), "D"),
    RelationSpec("eq3even-2a", (
        T("L", "1", ("al", "al", "a_al", _), ("be", "be", "b_be", _)),
        T("L", "-1", ("be", "al", "b_be", _), ("al", "be", "a_al", _)),
        T("R", "1", ("al be", "al be", "a_al b_be", _), (_, _, _, _)),
        T("R", "-1", ("al be", _, "a_al b_be", _), (_, "al be", _, _)),
    ), "D"),
]

TWO_POINT: Dict[str, RelationSpec] = {s.label: s for s in _TWO}
TWO_POINT_LABELS: Tuple[str, ...] = tuple(s.label for s in _TWO)
FAMILY_SOURCE = {"A": "3010", "B": "3001", "C": "2020", "D": "2011"}

# labels suspected of misprints (mixed component subscripts on one point)
SUSPECTED = ("eq5odd-2a", "eq5even-2a", "eq4even-3a", "eq5even-5a", "eq5even-4a")

# the unique single-token edit that makes each of these labels hold
# (found by exhaustive single-token search, see search_emendations)
EMENDATIONS: Dict[str, Edit] = {
    "eq4even-3a": Edit(0, "left.tbar", 0, "b_be", "b_al"),
    "eq5even-5a": Edit(1, "left.tbar", 0, "b_al", "b_be"),
    "eq5even-4a": Edit(1, "right.tbar", 0, "b_al", "b_be"),
}

# labels no single-token edit repairs; the smallest repair found is kept
# as a separate multi-token variant
MULTI_TOKEN_CORRECTIONS: Dict[str, Tuple[Edit, ...]] = {
    "eq5even-2a": (Edit(1, "left.tbar", 0, "b_al", "b_be"),
                   Edit(3, "left.tbar", 0, "b_al", "b_be")),
    "eq5odd-2a": (Edit(1, "right.tbar", 0, "b_al", "b_be"),
                  Edit(2, "left.tbar", 0, "b_al", "b_be"),
                  Edit(2, "coeff", 1, None, "ia"),
                  Edit(3, "coeff", 2, None, "ia")),
}

VARIANTS = ("printed", "emended", "corrected")


def two_point_variants(label: str) -> List[str]:
    out = ["printed"]
    if label in EMENDATIONS:
        out.append("emended")
    if label in MULTI_TOKEN_CORRECTIONS:
        out.append("corrected")
    return out


def two_point_spec(label: str, variant: str = "printed") -> RelationSpec:
    if label not in TWO_POINT:
        raise KeyError(f"unknown two-point label {label!r}")
    spec = TWO_POINT[label]
    if variant == "printed":
        return spec
    if variant == "emended":
        if label not in EMENDATIONS:
            raise KeyError(f"{label} has no single-token emendation")
        return apply_edit(spec, EMENDATIONS[label], "emended")
    if variant == "corrected":
        if label not in MULTI_TOKEN_CORRECTIONS:
            raise KeyError(f"{label} has no multi-token correction")
        for e in MULTI_TOKEN_CORRECTIONS[label]:
            spec = apply_edit(spec, e, "corrected")
        return spec
    raise KeyError(f"unknown variant {variant!r}")


def uses_beta(label: str) -> bool:
    return "be" in TWO_POINT[label].index_names()


def build_two_point(label: str, indices: Sequence[int], base: TauArgument,
                    vars: Sequence[str] = ("a", "b"), variant: str = "printed") -> Relation:
    spec = two_point_spec(label, variant)
    idx = tuple(indices) + (1,) * (4 - len(indices))
    rel = build_from_spec(spec, idx, base, tuple(vars) + ("c", "d"))
    return rel.with_meta(family=spec.family, trivial=is_symbolically_trivial(rel))


# -- one-component long forms ------------------------------------------------

ONE_COMPONENT: Dict[str, RelationSpec] = {
    "eq1-1": RelationSpec("eq1-1", (
        T("L", "a", (_, _, "a_al", _), ("al", "al", "b_al", _)),
        T("L", "-1 b", (_, _, "b_al", _), ("al", "al", "a_al", _)),
        T("R", "a-b", ("al", "al", "a_al b_al", _), (_, _, _, _)),
        T("R", "ia-ib", ("al al", _, "a_al b_al", _), ("-al", "al", _, _)),
    ), "N1"),
    "eq1-2": RelationSpec("eq1-2", (
        T("L", "a", (_, "al", "a_al", _), ("al", _, "b_al", _)),
        T("L", "-1 b", (_, "al", "b_al", _), ("al", _, "a_al", _)),
        T("R", "a-b", ("al", _, "a_al b_al", _), (_, "al", _, _)),
        T("R", "ia-ib", ("al al", "al", "a_al b_al", _), ("-al", _, _, _)),
    ), "N1"),
}
