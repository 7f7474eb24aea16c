"""Refined dual stable Grothendieck polynomials and Bender-Knuth involutions on rpps."""

from .gseries import check_symmetry, g_poly, gtilde, schur_poly
from .polynomial import SparsePoly
from .shapes import SkewShape, parse_skew
from .tableaux import Filling

__all__ = ["SkewShape", "parse_skew", "Filling", "SparsePoly", "gtilde", "g_poly", "schur_poly", "check_symmetry"]
__version__ = "0.1.0"
