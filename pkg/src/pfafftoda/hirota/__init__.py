"""Bilinear relations: construction, exact residuals, catalog, equivalences."""
from .catalog import (EMENDATIONS, FOURPOINT_KINDS, MULTI_TOKEN_CORRECTIONS, ONE_COMPONENT,
                      SUSPECTED, TWO_POINT, TWO_POINT_LABELS, build_canonical_4pt,
                      build_two_point, fourpoint_spec, two_point_spec, two_point_variants)
from .genhm import Scheme, build_genHM, classify_schemes, signature_text
from .relation import Coeff, Relation, RelationTerm, clear_denominators, relation_text, residual

__all__ = [
    "EMENDATIONS", "FOURPOINT_KINDS", "MULTI_TOKEN_CORRECTIONS", "ONE_COMPONENT", "SUSPECTED",
    "TWO_POINT", "TWO_POINT_LABELS", "build_canonical_4pt", "build_two_point", "fourpoint_spec",
    "two_point_spec", "two_point_variants", "Scheme", "build_genHM", "classify_schemes",
    "signature_text", "Coeff", "Relation", "RelationTerm", "clear_denominators",
    "relation_text", "residual",
]
