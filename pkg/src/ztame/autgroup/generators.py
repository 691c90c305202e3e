"""
z-endomorphisms and the generators of the z-tame group.

An endomorphism fixing z is written ``(f, g)``: the images of x and y.
``compose(e1, e2)`` substitutes the images of ``e1`` into the coordinates of
``e2``; it is the product ``e1 e2`` written left to right.  A word is folded
the same way, so ``apply_word([a, b, c]) == compose(compose(a, b), c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Sequence, Tuple, Union

from ..errors import InvalidGeneratorError
from ..ncpoly import ONE, X, Y, Z, NCPoly, substitute


@dataclass(frozen=True)
class ZEndomorphism:
    f: NCPoly
    g: NCPoly

    def __iter__(self):
        return iter((self.f, self.g))

    def is_identity(self) -> bool:
        return self.f == X and self.g == Y


IDENTITY = ZEndomorphism(X, Y)


def compose(e1: ZEndomorphism, e2: ZEndomorphism) -> ZEndomorphism:
    return ZEndomorphism(substitute(e2.f, e1.f, e1.g), substitute(e2.g, e1.f, e1.g))


Matrix2 = Tuple[Tuple[Fraction, Fraction], Tuple[Fraction, Fraction]]


def _fr(pair) -> Tuple[Fraction, Fraction]:
    return tuple(Fraction(v) for v in pair)


@dataclass(frozen=True)
class Affine:
    """``(a11 x + a21 y + c1 z + b1, a12 x + a22 y + c2 z + b2)``.

    ``m[i][j]`` is the coefficient of variable i (x, y) in coordinate j.
    """

    m: Matrix2
    zc: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))
    tr: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    def __post_init__(self):
        object.__setattr__(self, "m", tuple(_fr(row) for row in self.m))
        object.__setattr__(self, "zc", _fr(self.zc))
        object.__setattr__(self, "tr", _fr(self.tr))
        if self.det() == 0:
            raise InvalidGeneratorError("affine generator with singular matrix")

    def det(self) -> Fraction:
        (a, b), (c, d) = self.m
        return a * d - b * c


@dataclass(frozen=True)
class Triangular:
    """``(a1 x + p1(y, z), a2 y + p2(z))``."""

    a1: Fraction
    p1: NCPoly
    a2: Fraction
    p2: NCPoly

    def __post_init__(self):
        object.__setattr__(self, "a1", Fraction(self.a1))
        object.__setattr__(self, "a2", Fraction(self.a2))
        if not self.a1 or not self.a2:
            raise InvalidGeneratorError("triangular generator with a zero diagonal entry")
        if any("x" in w for w in self.p1.words()):
            raise InvalidGeneratorError("p1 must not contain x")
        if any(set(w) - {"z"} for w in self.p2.words()):
            raise InvalidGeneratorError("p2 must be a polynomial in z")

    def is_identity(self) -> bool:
        return self.a1 == 1 and self.a2 == 1 and not self.p1 and not self.p2


@dataclass(frozen=True)
class Tau:
    """The swap ``(y, x)``."""


TAU = Tau()
Generator = Union[Affine, Triangular, Tau]
TameWord = Sequence[Generator]


def triangular(p1: NCPoly, a1=1, a2=1, p2: NCPoly = NCPoly()) -> Triangular:
    return Triangular(Fraction(a1), p1, Fraction(a2), p2)


TRIANGULAR_ID = triangular(NCPoly())


def apply_generator(gen: Generator) -> ZEndomorphism:
    if isinstance(gen, Tau):
        return ZEndomorphism(Y, X)
    if isinstance(gen, Triangular):
        return ZEndomorphism(gen.a1 * X + gen.p1, gen.a2 * Y + gen.p2)
    if isinstance(gen, Affine):
        (a11, a12), (a21, a22) = gen.m
        f = a11 * X + a21 * Y + gen.zc[0] * Z + gen.tr[0] * ONE
        g = a12 * X + a22 * Y + gen.zc[1] * Z + gen.tr[1] * ONE
        return ZEndomorphism(f, g)
    raise TypeError(f"not a generator: {gen!r}")


def apply_word(word: TameWord) -> ZEndomorphism:
    acc = IDENTITY
    for gen in word:
        acc = compose(acc, apply_generator(gen))
    return acc


def invert_generator(gen: Generator) -> List[Generator]:
    if isinstance(gen, Tau):
        return [TAU]
    if isinstance(gen, Triangular):
        new_y = (Y - gen.p2) / gen.a2
        p1 = -substitute(gen.p1, X, new_y) / gen.a1
        return [Triangular(1 / gen.a1, p1, 1 / gen.a2, -gen.p2 / gen.a2)]
    if isinstance(gen, Affine):
        (a, b), (c, d) = gen.m
        det = gen.det()
        inv = ((d / det, -b / det), (-c / det, a / det))

        def times_inv(row):
            return tuple(row[0] * inv[0][j] + row[1] * inv[1][j] for j in range(2))

        zc = times_inv(gen.zc)
        tr = times_inv(gen.tr)
        return [Affine(inv, (-zc[0], -zc[1]), (-tr[0], -tr[1]))]
    raise TypeError(f"not a generator: {gen!r}")


def invert_word(word: TameWord) -> List[Generator]:
    out: List[Generator] = []
    for gen in reversed(word):
        out.extend(invert_generator(gen))
    return out


def triangular_from(e: ZEndomorphism) -> Triangular:
    """Read an endomorphism of triangular shape back as a generator."""
    a1 = e.f.coeff("x")
    p1 = e.f - a1 * X
    a2 = e.g.coeff("y")
    p2 = e.g - a2 * Y
    return Triangular(a1, p1, a2, p2)


def compose_triangular(a: Triangular, b: Triangular) -> Triangular:
    return triangular_from(compose(apply_generator(a), apply_generator(b)))


def affine_to_triangular_word(gen: Affine) -> List[Generator]:
    """Write an affine generator as triangular generators and one optional swap."""
    (a11, a12), (a21, a22) = gen.m
    u1 = gen.zc[0] * Z + gen.tr[0] * ONE
    u2 = gen.zc[1] * Z + gen.tr[1] * ONE
    if a12 == 0:
        return [Triangular(a11, a21 * Y + u1, a22, u2)]
    k = a22 / a12
    c1 = a21 - a11 * k
    return [triangular(k * Y), TAU, Triangular(c1, a11 * Y + u1, a12, u2)]
