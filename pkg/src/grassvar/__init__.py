"""Exact sign-variation tools for subspaces, oriented matroids and positroids."""
from .chirotope import Chirotope, chirotope_of, cocircuits_of, covectors_of, covectors_of_chirotope
from .exact import ExactMatrix, Subspace, kernel, maximal_minors, orthogonal_complement, row_reduce
from .signs import parse_signs, var, varbar

__version__ = "0.1.0"

__all__ = [
    "Chirotope",
    "ExactMatrix",
    "Subspace",
    "chirotope_of",
    "cocircuits_of",
    "covectors_of",
    "covectors_of_chirotope",
    "kernel",
    "maximal_minors",
    "orthogonal_complement",
    "parse_signs",
    "row_reduce",
    "var",
    "varbar",
]
