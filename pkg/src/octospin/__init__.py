"""Octonions, Clifford generators, low-dimensional spin representations,
invariant polynomials, and orbit classification over exact rationals."""

from .families import (
    FAMILIES,
    FAMILY_DIMS,
    FamilyBasis,
    FamilyError,
    LieElement,
    family_basis,
)
from .invariants import OrbitLabel, Spinor, classify, p_quartic, stabilizer_dim
from .octonion import Octonion, conj, inner, norm_sq, oct_mul

__version__ = "0.1.0"

__all__ = [
    "FAMILIES",
    "FAMILY_DIMS",
    "FamilyBasis",
    "FamilyError",
    "LieElement",
    "Octonion",
    "OrbitLabel",
    "Spinor",
    "classify",
    "conj",
    "family_basis",
    "inner",
    "norm_sq",
    "oct_mul",
    "p_quartic",
    "stabilizer_dim",
    "__version__",
]
