"""Irreducibility certificates for truncated binomial expansions."""

from .certify import Certificate, Kind, Scope, certify
from .kernels import BACKEND
from .poly import FnkSpec, IntPoly, build_fnk, build_pnk, shifted_coeffs

__all__ = ["BACKEND", "Certificate", "FnkSpec", "IntPoly", "Kind", "Scope",
           "build_fnk", "build_pnk", "certify", "shifted_coeffs"]
__version__ = "0.1.0"
