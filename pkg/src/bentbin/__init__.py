"""Spectral, differential and 2-adic analysis of power-sum functions over GF(2^n)."""

__version__ = "0.1.0"

from ._kernels import backend
from .gf2n import FieldContext, ResourceGateError, default_modulus, make_field

__all__ = [
    "FieldContext",
    "ResourceGateError",
    "backend",
    "default_modulus",
    "make_field",
    "__version__",
]
