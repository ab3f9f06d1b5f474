"""Lexsegment edge ideals: closed-form invariants, arithmetical-rank
certificates and two independent oracles to check them."""

from .duality import alexander_dual, dual_projdim
from .lexsegment import (
    InvariantReport,
    LexSegmentIdeal,
    all_pairs,
    invariants,
    invariants_original,
    normalize,
    segment,
)
from .monomial import MonomialIdeal, SquarefreeMonomial, parse_monomial
from .polynomial import GF2, GF32003, QQ, Field, Polynomial
from .witness import certificate, dual_witness, dual_witness_original, sv_lex_witness

__all__ = [
    "Field", "GF2", "GF32003", "InvariantReport", "LexSegmentIdeal", "MonomialIdeal",
    "Polynomial", "QQ", "SquarefreeMonomial", "alexander_dual", "all_pairs", "certificate",
    "dual_projdim", "dual_witness", "dual_witness_original", "invariants",
    "invariants_original", "normalize", "parse_monomial", "segment", "sv_lex_witness",
]

__version__ = "0.1.0"
