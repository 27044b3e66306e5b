"""Geometric algebra engine, script compiler, and visualization pipeline."""

from .algebra import (
    CGA3D,
    EUCLID3D,
    SPACES,
    AlgebraSignature,
    Multivector,
    basis_product,
    blade_grade,
    exp_bivector,
    sandwich,
)
from .cga import EuclidPoint, GeometricObjectKind, classify, embed_point, extract_point

__version__ = "0.1.0"

__all__ = [
    "AlgebraSignature",
    "CGA3D",
    "EUCLID3D",
    "EuclidPoint",
    "GeometricObjectKind",
    "Multivector",
    "SPACES",
    "basis_product",
    "blade_grade",
    "classify",
    "embed_point",
    "extract_point",
    "exp_bivector",
    "sandwich",
    "__version__",
]
