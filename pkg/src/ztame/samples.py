"""
Seeded random inputs for property tests and the acceptance suite.

Every generator takes a ``random.Random`` so runs are reproducible.  The
number of monomials of a composed map grows like (terms per factor) to the
power of the degree, so the tame-word generator rejects words whose composed
coordinates would exceed ``TERM_CAP`` monomials.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Optional

from .autgroup.generators import Triangular, ZEndomorphism, apply_generator
from .autgroup.jacobian import Mat2, elementary
from .autgroup.normal_form import NormalForm
from .cpoly import T, ZBAR, CPoly
from .formanek import FormanekForm
from .ncpoly import X, Y, NCPoly, poly_bidegree

COEFFS = [c for c in range(-3, 4) if c]
TERM_CAP = 1000


def nonzero(rng: random.Random) -> Fraction:
    return Fraction(rng.choice(COEFFS))


def random_word(rng: random.Random, letters: dict) -> str:
    """Random arrangement of the given letter counts, e.g. {"y": 2, "z": 1}."""
    pool = [ch for ch, n in letters.items() for _ in range(n)]
    rng.shuffle(pool)
    return "".join(pool)


def random_yz(rng: random.Random, max_y: int = 3, max_z: int = 3, max_terms: int = 3, min_y: int = 1) -> NCPoly:
    """Polynomial in y, z whose monomials have y-degree in [min_y, max_y]."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        w = random_word(rng, {"y": rng.randint(min_y, max_y), "z": rng.randint(0, max_z)})
        terms[w] = nonzero(rng)
    return NCPoly(terms)


def random_z(rng: random.Random, max_z: int = 3, max_terms: int = 2) -> NCPoly:
    if rng.random() < 0.3:
        return NCPoly()
    return NCPoly({"z" * rng.randint(0, max_z): nonzero(rng) for _ in range(rng.randint(1, max_terms))})


def _big(p: NCPoly) -> bool:
    return not p.is_zero() and poly_bidegree(p) > (1, 0)


def random_big_yz(rng: random.Random, **kw) -> NCPoly:
    """Random y,z polynomial of bidegree above (1, 0)."""
    while True:
        p = random_yz(rng, **kw)
        if _big(p):
            return p


def random_rho0(rng: random.Random, kind: str = "any") -> Triangular:
    """``kind``: 'big' (bideg p > (1,0)), 'linear' (gamma y + p(z), gamma != 0) or 'any'."""
    if kind == "any":
        kind = rng.choice(["big", "big", "linear"])
    if kind == "big":
        p1 = random_big_yz(rng) + random_z(rng)
    else:
        p1 = nonzero(rng) * Y + random_z(rng)
    return Triangular(nonzero(rng), p1, nonzero(rng), random_z(rng))


def _image_size(p: NCPoly, sizes: dict) -> int:
    """Upper bound on the number of monomials of p after substituting images of the given sizes."""
    total = 0
    for w in p.words():
        n = 1
        for ch in w:
            n *= sizes.get(ch, 1)
        total += n
    return total


def composed_size(word) -> int:
    """Bound on the monomial count of the larger coordinate of ``apply_word(word)``."""
    sizes = {"x": 1, "y": 1}
    for gen in word:
        e = apply_generator(gen)
        sizes = {"x": _image_size(e.f, sizes), "y": _image_size(e.g, sizes)}
    return max(sizes.values())


def random_normal_form(
    rng: random.Random,
    n: Optional[int] = None,
    case: Optional[str] = None,
    max_n: int = 4,
    cap: int = TERM_CAP,
) -> NormalForm:
    """Random reduced normal form with ``n`` swaps.

    ``case`` forces one of the leading-term cases 'A', 'B', 'C' (requires n >= 1).
    """
    while True:
        size = n if n is not None else rng.randint(1 if case else 0, max_n)
        if case == "B":
            rho0 = random_rho0(rng, "linear")
        elif case in ("A", "C"):
            rho0 = random_rho0(rng, "big")
        else:
            rho0 = random_rho0(rng)
        rhos: List[Triangular] = [rho0]
        for i in range(1, size + 1):
            last = i == size
            if last and case == "C":
                p = nonzero(rng) * Y
            elif last and case is None and rng.random() < 0.25:
                p = nonzero(rng) * Y
            else:
                p = random_big_yz(rng)
            rhos.append(Triangular(1, p, 1, NCPoly()))
        nf = NormalForm(tuple(rhos))
        if composed_size(nf.to_word()) <= cap:
            return nf


def random_tame_word(rng: random.Random, **kw):
    return random_normal_form(rng, **kw).to_word()


def random_cpoly(
    rng: random.Random,
    family: str = T,
    nvars: int = 3,
    max_deg: int = 3,
    max_terms: int = 4,
    allow_zero: bool = False,
) -> CPoly:
    width = 2 if family == ZBAR else nvars
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            exps = [0] * (width + (1 if family == ZBAR else 0))
            for _ in range(rng.randint(0, max_deg)):
                i = rng.randrange(width)
                exps[i + (1 if family == ZBAR else 0)] += 1
            terms[tuple(exps)] = nonzero(rng)
        p = CPoly(terms, family)
        if p or allow_zero:
            return p


def random_elementary_product(rng: random.Random, max_factors: int = 8, max_deg: int = 3) -> List[Mat2]:
    factors = []
    for _ in range(rng.randint(1, max_factors)):
        i = rng.randrange(2)
        q = random_cpoly(rng, ZBAR, max_deg=max_deg, max_terms=2)
        factors.append(elementary(i, 1 - i, q))
    return factors


def random_mixed(rng: random.Random, max_terms: int = 3, max_len: int = 4) -> NCPoly:
    """Nonzero polynomial whose monomials all contain both x and y."""
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        extra = rng.randint(0, max_len - 2)
        counts = {"x": 1, "y": 1, "z": 0}
        for _ in range(extra):
            counts[rng.choice("xyz")] += 1
        terms[random_word(rng, counts)] = nonzero(rng)
    return NCPoly(terms)


def random_mixed_endomorphism(rng: random.Random) -> ZEndomorphism:
    u = random_mixed(rng)
    v = random_mixed(rng) if rng.random() < 0.7 else NCPoly()
    if rng.random() < 0.5:
        u, v = v, u
    if u.is_zero() and v.is_zero():
        u = random_mixed(rng)
    return ZEndomorphism(X + u, Y + v)


def random_form(rng: random.Random, n: int, max_z: int = 3, max_words: int = 2) -> FormanekForm:
    """Random nonzero element of H_n with t-degree at most ``max_z``."""
    coeffs = {}
    for _ in range(rng.randint(1, max_words)):
        word = "".join(rng.choice("xy") for _ in range(n))
        coeffs[word] = random_cpoly(rng, T, nvars=n + 1, max_deg=max_z, max_terms=2)
    return FormanekForm(n, coeffs)


def random_nc(rng: random.Random, letters: str = "xyz", max_len: int = 4, max_terms: int = 4) -> NCPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        w = "".join(rng.choice(letters) for _ in range(rng.randint(0, max_len)))
        terms[w] = Fraction(rng.randint(-9, 9), rng.choice([1, 1, 2, 3, 7]))
    return NCPoly(terms)


def random_h(rng: random.Random, max_t: int = 2) -> NCPoly:
    """Random h(t, z) (t written as x) with positive t-degree at most ``max_t``."""
    while True:
        p = random_nc(rng, "xz", max_len=max_t + 1, max_terms=3)
        degs = [w.count("x") for w in p.words()]
        if degs and 0 < max(degs) <= max_t:
            return p
