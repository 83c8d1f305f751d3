"""Exact computations for the first Drinfeld covering of the p-adic symmetric space.

Residue rings, hyperplane classes, standard simplices of the building,
exponent-vector calculus for Kummer classes, the cover ring and the
canonical forms of its units.
"""
from .base_rings import Params, make_ring
from .errors import (InvalidParameters, NonUnit, NotAUnit, Sigma1Error,
                     UnsupportedRing)

__version__ = "0.1.0"

__all__ = ["Params", "make_ring", "Sigma1Error", "InvalidParameters", "UnsupportedRing",
           "NonUnit", "NotAUnit", "__version__"]
