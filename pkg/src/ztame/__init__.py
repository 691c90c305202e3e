"""Exact arithmetic in Q<x,y,z> and recognition of z-tame automorphisms and coordinates."""

from .autgroup import TAU, Affine, Triangular, ZEndomorphism, apply_word, compose, normalize
from .cpoly import CPoly
from .ncpoly import NCPoly
from .parsing import parse_c, parse_h, parse_nc, print_c, print_nc
from .recognize import (
    Decision,
    Verdict,
    mixed_monomial_filter,
    recognize_automorphism,
    recognize_coordinate,
    sigma_h,
)

__version__ = "0.1.0"

__all__ = [
    "TAU",
    "Affine",
    "CPoly",
    "Decision",
    "NCPoly",
    "Triangular",
    "Verdict",
    "ZEndomorphism",
    "apply_word",
    "compose",
    "mixed_monomial_filter",
    "normalize",
    "parse_c",
    "parse_h",
    "parse_nc",
    "print_c",
    "print_nc",
    "recognize_automorphism",
    "recognize_coordinate",
    "sigma_h",
]
