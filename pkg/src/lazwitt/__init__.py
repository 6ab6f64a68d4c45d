"""Exact arithmetic for Lazardian Witt vectors, their arithmetic polynomials and jet algebras."""

from .params import Params, ParamError
from .poly import Poly, Var, DomainMismatch

__all__ = ["Params", "ParamError", "Poly", "Var", "DomainMismatch"]
__version__ = "0.1.0"
