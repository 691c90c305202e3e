"""
JSON encodings of generators, words, endomorphisms and 2x2 matrices.

Polynomials travel as text in the parser's grammar and rationals as strings
like ``"-3/4"`` so that files stay exact and diffable.  A word is a JSON list
of generators (leftmost applied first), optionally wrapped as ``{"word": [...]}``.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, List

from .autgroup.generators import TAU, Affine, Generator, Tau, Triangular, ZEndomorphism
from .autgroup.jacobian import Mat2, mat
from .cpoly import ZBAR
from .errors import ZTameError
from .ncpoly import NCPoly
from .parsing import parse_c, parse_nc, print_c, print_nc


class FormatError(ZTameError):
    """JSON that does not describe the expected object."""


def _num(v) -> Fraction:
    if isinstance(v, bool) or not isinstance(v, (int, str)):
        raise FormatError(f"expected an integer or a rational string, got {v!r}")
    try:
        return Fraction(v)
    except (ValueError, ZeroDivisionError):
        raise FormatError(f"not a rational number: {v!r}") from None


def _poly(v) -> NCPoly:
    if not isinstance(v, str):
        raise FormatError(f"expected polynomial text, got {v!r}")
    return parse_nc(v)


def generator_to_json(gen: Generator) -> Dict[str, Any]:
    if isinstance(gen, Tau):
        return {"type": "tau"}
    if isinstance(gen, Triangular):
        return {
            "type": "triangular",
            "a1": str(gen.a1),
            "p1": print_nc(gen.p1),
            "a2": str(gen.a2),
            "p2": print_nc(gen.p2),
        }
    if isinstance(gen, Affine):
        return {
            "type": "affine",
            "matrix": [[str(c) for c in row] for row in gen.m],
            "zc": [str(c) for c in gen.zc],
            "tr": [str(c) for c in gen.tr],
        }
    raise TypeError(f"not a generator: {gen!r}")


def generator_from_json(obj: Any) -> Generator:
    if not isinstance(obj, dict) or "type" not in obj:
        raise FormatError(f"generator must be an object with a 'type': {obj!r}")
    kind = obj["type"]
    if kind == "tau":
        return TAU
    if kind == "triangular":
        return Triangular(
            _num(obj.get("a1", 1)),
            _poly(obj.get("p1", "0")),
            _num(obj.get("a2", 1)),
            _poly(obj.get("p2", "0")),
        )
    if kind == "affine":
        m = obj.get("matrix")
        if not (isinstance(m, list) and len(m) == 2 and all(isinstance(r, list) and len(r) == 2 for r in m)):
            raise FormatError("affine 'matrix' must be 2x2")
        zc = obj.get("zc", [0, 0])
        tr = obj.get("tr", [0, 0])
        return Affine(
            tuple(tuple(_num(c) for c in row) for row in m),
            tuple(_num(c) for c in zc),
            tuple(_num(c) for c in tr),
        )
    raise FormatError(f"unknown generator type {kind!r}")


def word_to_json(word) -> List[Dict[str, Any]]:
    return [generator_to_json(g) for g in word]


def word_from_json(obj: Any) -> List[Generator]:
    if isinstance(obj, dict) and "word" in obj:
        obj = obj["word"]
    if not isinstance(obj, list):
        raise FormatError("a word is a list of generators")
    return [generator_from_json(g) for g in obj]


def endomorphism_to_json(e: ZEndomorphism) -> Dict[str, str]:
    return {"f": print_nc(e.f), "g": print_nc(e.g)}


def matrix_to_json(m: Mat2) -> List[List[str]]:
    return [[print_c(c) for c in row] for row in m]


def matrix_from_json(obj: Any) -> Mat2:
    if isinstance(obj, dict) and "matrix" in obj:
        obj = obj["matrix"]
    if not (isinstance(obj, list) and len(obj) == 2 and all(isinstance(r, list) and len(r) == 2 for r in obj)):
        raise FormatError("matrix must be a 2x2 list of lists")
    rows = []
    for row in obj:
        out = []
        for c in row:
            if isinstance(c, str):
                out.append(parse_c(c, ZBAR))
            else:
                out.append(_num(c))
        rows.append(out)
    return mat(rows)
