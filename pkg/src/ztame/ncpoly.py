"""
Sparse polynomials in the free associative algebra Q<x, y, z>.

A monomial is a word over the letters ``x``, ``y``, ``z`` stored as a plain
string (the empty string is 1).  A polynomial is an immutable map
word -> Fraction with no zero coefficients.  Words are ordered
length-first, then lexicographically, which fixes the iteration and printing
order.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Mapping, Tuple

from .errors import ZeroPolynomialError

LETTERS = "xyz"

# degree of the zero polynomial
MINUS_INFINITY = float("-inf")


def word_key(word: str) -> Tuple[int, str]:
    return (len(word), word)


def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, (int, str)):
        return Fraction(c)
    raise TypeError(f"cannot use {type(c).__name__} as a coefficient")


class NCPoly:
    """Immutable element of Q<x,y,z>."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[str, object] | None = None):
        clean: Dict[str, Fraction] = {}
        if terms:
            for w, c in terms.items():
                if any(ch not in LETTERS for ch in w):
                    raise ValueError(f"invalid word {w!r}")
                c = _coerce_scalar(c)
                if c:
                    clean[w] = clean.get(w, 0) + c
                    if not clean[w]:
                        del clean[w]
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[str, Fraction]) -> "NCPoly":
        # caller guarantees no zero coefficients
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def const(cls, c) -> "NCPoly":
        return cls({"": c})

    @classmethod
    def var(cls, letter: str) -> "NCPoly":
        return cls({letter: 1})

    @classmethod
    def monomial(cls, word: str, c=1) -> "NCPoly":
        return cls({word: c})

    # -- container protocol ------------------------------------------------
    @property
    def terms(self) -> Dict[str, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[str, Fraction]]:
        """Terms in length-lex order."""
        for w in sorted(self._terms, key=word_key):
            yield w, self._terms[w]

    def words(self) -> Iterable[str]:
        return self._terms.keys()

    def coeff(self, word: str) -> Fraction:
        return self._terms.get(word, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, NCPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == NCPoly.const(other)._terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- ring operations -----------------------------------------------------
    @staticmethod
    def _lift(other) -> "NCPoly":
        if isinstance(other, NCPoly):
            return other
        return NCPoly.const(_coerce_scalar(other))

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            s = out.get(w, 0) + c
            if s:
                out[w] = s
            else:
                out.pop(w, None)
        return NCPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return NCPoly._raw({w: -c for w, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, NCPoly):
            return self.scale(other)
        out: Dict[str, Fraction] = {}
        for w1, c1 in self._terms.items():
            for w2, c2 in other._terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return NCPoly._raw({w: c for w, c in out.items() if c})

    def __rmul__(self, other):
        # scalars commute with everything
        return self.scale(other)

    def scale(self, c) -> "NCPoly":
        c = _coerce_scalar(c)
        if not c:
            return NCPoly()
        return NCPoly._raw({w: c * v for w, v in self._terms.items()})

    def __truediv__(self, c):
        return self.scale(1 / _coerce_scalar(c))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = NCPoly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __repr__(self):
        from .parsing import print_nc

        return f"NCPoly({print_nc(self)!r})"

    def __str__(self):
        from .parsing import print_nc

        return print_nc(self)


def add(p: NCPoly, q: NCPoly) -> NCPoly:
    return p + q


def mul(p: NCPoly, q: NCPoly) -> NCPoly:
    return p * q


def scale(c, p: NCPoly) -> NCPoly:
    return p.scale(c)


X = NCPoly.var("x")
Y = NCPoly.var("y")
Z = NCPoly.var("z")
ONE = NCPoly.const(1)
ZERO = NCPoly()


# -- gradings -----------------------------------------------------------------

def degree_in(p: NCPoly, var: str) -> float:
    """Largest number of occurrences of ``var`` in a monomial of ``p``.

    Returns ``MINUS_INFINITY`` for the zero polynomial.
    """
    if var not in LETTERS:
        raise ValueError(f"unknown variable {var!r}")
    if p.is_zero():
        return MINUS_INFINITY
    return max(w.count(var) for w in p.words())


def xy_degree(p: NCPoly) -> float:
    if p.is_zero():
        return MINUS_INFINITY
    return max(len(w) - w.count("z") for w in p.words())


def bidegree(word: str, weights: Tuple[int, int] = (1, 1)) -> Tuple[int, int]:
    a, b = weights
    return (a * word.count("x") + b * word.count("y"), word.count("z"))


def poly_bidegree(p: NCPoly, weights: Tuple[int, int] = (1, 1)) -> Tuple[int, int]:
    if p.is_zero():
        raise ZeroPolynomialError("bidegree of the zero polynomial")
    return max(bidegree(w, weights) for w in p.words())


def leading_bicomponent(p: NCPoly, weights: Tuple[int, int] = (1, 1)) -> NCPoly:
    """Sum of the monomials of maximal weighted bidegree.

    The weighted bidegree of a monomial is ``(a*deg_x + b*deg_y, deg_z)``,
    compared lexicographically.
    """
    if p.is_zero():
        raise ZeroPolynomialError("leading component of the zero polynomial")
    top = poly_bidegree(p, weights)
    return NCPoly._raw({w: c for w, c in p._terms.items() if bidegree(w, weights) == top})


def is_bihomogeneous(p: NCPoly, weights: Tuple[int, int] = (1, 1)) -> bool:
    return len({bidegree(w, weights) for w in p.words()}) <= 1


def depends_only_on_z(p: NCPoly) -> bool:
    return all(set(w) <= {"z"} for w in p.words())


def is_linear_in_xy(p: NCPoly) -> bool:
    return all(len(w) - w.count("z") <= 1 for w in p.words())


def z_part(p: NCPoly) -> NCPoly:
    """The summand of ``p`` lying in Q[z]."""
    return NCPoly._raw({w: c for w, c in p._terms.items() if set(w) <= {"z"}})


# -- substitution ---------------------------------------------------------------

def substitute(p: NCPoly, image_x: NCPoly, image_y: NCPoly, image_z: NCPoly = Z) -> NCPoly:
    """Apply the algebra endomorphism x -> image_x, y -> image_y, z -> image_z."""
    images = {"x": image_x, "y": image_y, "z": image_z}
    # memo on word prefixes; words of p often share prefixes
    memo: Dict[str, NCPoly] = {"": ONE}

    def image_of(word: str) -> NCPoly:
        hit = memo.get(word)
        if hit is not None:
            return hit
        # strip the longest cached prefix
        i = len(word) - 1
        while word[:i] not in memo:
            i -= 1
        acc = memo[word[:i]]
        for j in range(i, len(word)):
            acc = acc * images[word[j]]
            memo[word[: j + 1]] = acc
        return acc

    out: Dict[str, Fraction] = {}
    for w, c in p.items():
        for v, d in image_of(w)._terms.items():
            out[v] = out.get(v, 0) + c * d
    return NCPoly._raw({w: c for w, c in out.items() if c})


def set_zero(p: NCPoly, letter: str) -> NCPoly:
    """Drop every monomial containing ``letter``."""
    return NCPoly._raw({w: c for w, c in p._terms.items() if letter not in w})


def swap_xy(p: NCPoly) -> NCPoly:
    table = str.maketrans("xy", "yx")
    return NCPoly._raw({w.translate(table): c for w, c in p._terms.items()})
