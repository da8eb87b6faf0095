"""Augmented Bergman complexes of matroids: construction, convex ear
decompositions, f/h enumeration and Chow series."""

from .complex import SimplicialComplex, f_polynomial, h_polynomial, verify_shelling
from .ears import build_ced, verify_ced
from .matroid import Matroid, flat_lattice
from .matroid_complexes import augmented_bergman_complex, bergman_complex, independence_complex
from .poly import Poly, f_from_h, h_from_f

__version__ = "0.1.0"

__all__ = [
    "Matroid", "flat_lattice", "SimplicialComplex", "Poly",
    "f_polynomial", "h_polynomial", "h_from_f", "f_from_h", "verify_shelling",
    "independence_complex", "bergman_complex", "augmented_bergman_complex",
    "build_ced", "verify_ced",
]
