"""Exact computer algebra for generalized Clifford algebras of monic cubic forms."""
from __future__ import annotations

from .errors import GencliffError, ParseError, PreconditionError, VerificationError
from .fieldtower import GF, QQ, Field, FieldElement, adjoin_rho, extend, make_field
from .ncalg import NCPoly, NCRing, RewriteSystem, overlap_check, star_product
from .symbolalg import SymbolAlgebraSpec
from .repcheck import GeneralPresentation, MatrixRep, is_representation, minimal_poly_check
from .cubic3_char0 import CubicPresentation
from .cubic3_char3 import Char3Presentation
from .parsing import parse_field, parse_phi

__version__ = "0.1.0"

__all__ = [
    "GencliffError", "ParseError", "PreconditionError", "VerificationError",
    "GF", "QQ", "Field", "FieldElement", "adjoin_rho", "extend", "make_field",
    "NCPoly", "NCRing", "RewriteSystem", "overlap_check", "star_product",
    "SymbolAlgebraSpec", "GeneralPresentation", "MatrixRep", "is_representation",
    "minimal_poly_check", "CubicPresentation", "Char3Presentation", "parse_field", "parse_phi",
]
