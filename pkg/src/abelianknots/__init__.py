"""Abelian knot invariants from crossing-change data and Whitney-tower input.

The pipeline computes the Alexander polynomial, a hermitian presentation
matrix for the Blanchfield form, and the Arf invariant of a knot from a
planar diagram plus a set of unknotting crossing changes; a Fox-calculus
oracle validates everything independently.
"""

from .laurent import (DivisionByZero, DomainError, LaurentMatrix, LaurentPoly,
                      RationalFraction, ShapeError, Z)
from .diagram import (MarkedSet, OrientedDiagram, ParseError, ValidationError,
                      change_crossings, parse_gauss, parse_pd)
from .oracle import alexander_poly_oracle, arf_levine, wirtinger

__all__ = [
    "DivisionByZero", "DomainError", "LaurentMatrix", "LaurentPoly",
    "RationalFraction", "ShapeError", "Z",
    "MarkedSet", "OrientedDiagram", "ParseError", "ValidationError",
    "change_crossings", "parse_gauss", "parse_pd",
    "alexander_poly_oracle", "arf_levine", "wirtinger",
]
