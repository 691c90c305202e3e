"""
Reduced words in the amalgamated product of z-affine and z-triangular maps.

A normal form is ``rho_n tau ... tau rho_1 tau rho_0`` where ``rho_0`` is an
arbitrary triangular map and, for i >= 1, ``rho_i = (x + p_i(y, z), y)`` with
``p_i(0, z) = 0``; the interior ``rho_1 .. rho_(n-1)`` are not affine.  As a
word it reads ``[rho_n, tau, ..., tau, rho_0]``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import OutsideCaseSplitError, TrivialWordError
from ..ncpoly import X, Y, NCPoly, leading_bicomponent, poly_bidegree, set_zero, substitute
from .generators import (
    TAU,
    TRIANGULAR_ID,
    Affine,
    Generator,
    Tau,
    Triangular,
    ZEndomorphism,
    affine_to_triangular_word,
    apply_word,
    compose_triangular,
    triangular,
)


def split_triangular(rho: Triangular) -> Tuple[Triangular, Triangular]:
    """``rho = N D`` with ``N = (x + p~(y,z), y)``, ``p~(0,z) = 0`` and ``D`` diagonal up to z-terms."""
    p0 = set_zero(rho.p1, "y")
    n = triangular((rho.p1 - p0) / rho.a1)
    d = Triangular(rho.a1, p0, rho.a2, rho.p2)
    return n, d


def swap_through_tau(d: Triangular) -> Triangular:
    """For ``d = (a x + p(z), b y + r(z))``, the ``d'`` with ``d tau = tau d'``."""
    return Triangular(d.a2, d.p2, d.a1, d.p1)


def affine_coefficient(rho: Triangular) -> Optional[Fraction]:
    """gamma if ``rho == (x + gamma y, y)`` (gamma may be 0), else None."""
    if rho.a1 != 1 or rho.a2 != 1 or rho.p2:
        return None
    if any(w != "y" for w in rho.p1.words()):
        return None
    return rho.p1.coeff("y")


def is_affine_like(rho: Triangular) -> bool:
    """A map ``(x + p, y)`` with ``p(0,z) = 0`` is affine iff ``p = gamma y``."""
    return affine_coefficient(rho) is not None


@dataclass(frozen=True)
class NormalForm:
    rhos: Tuple[Triangular, ...]  # rho_0, rho_1, ..., rho_n

    @property
    def n(self) -> int:
        return len(self.rhos) - 1

    @property
    def rho0_affine(self) -> bool:
        p = self.rhos[0].p1
        return p.is_zero() or poly_bidegree(p) <= (1, 0)

    @property
    def rhon_affine(self) -> bool:
        return self.n >= 1 and is_affine_like(self.rhos[-1])

    def to_word(self) -> List[Generator]:
        word: List[Generator] = []
        for i in range(self.n, 0, -1):
            word.extend([self.rhos[i], TAU])
        word.append(self.rhos[0])
        return word

    def is_trivial(self) -> bool:
        return self.n == 0 and self.rhos[0].is_identity()

    def check(self) -> None:
        """Raise AssertionError if the structural constraints fail."""
        for i in range(1, self.n + 1):
            rho = self.rhos[i]
            assert rho.a1 == 1 and rho.a2 == 1 and not rho.p2, f"rho_{i} not unipotent"
            assert set_zero(rho.p1, "y").is_zero(), f"p_{i}(0,z) != 0"
            if i < self.n:
                assert not is_affine_like(rho), f"interior rho_{i} is affine"


def normalize(word: Sequence[Generator]) -> NormalForm:
    """Reduce a word to normal form without changing the endomorphism."""
    letters: List[Generator] = []
    for gen in word:
        if isinstance(gen, Affine):
            letters.extend(affine_to_triangular_word(gen))
        else:
            letters.append(gen)

    stack: List[Triangular] = []  # rho_n, ..., rho_1; a tau follows each entry
    cur = TRIANGULAR_ID
    for gen in letters:
        if isinstance(gen, Triangular):
            cur = compose_triangular(cur, gen)
            continue
        assert isinstance(gen, Tau)
        n_part, d_part = split_triangular(cur)
        cur = swap_through_tau(d_part)
        gamma = affine_coefficient(n_part)
        if gamma is None or not stack:
            stack.append(n_part)
        elif gamma == 0:
            # rho tau (id) tau D' = rho D'
            cur = compose_triangular(stack.pop(), cur)
        else:
            # tau (x + g y, y) tau = (x, y + g x) = T1 tau T2
            t1 = triangular(Y / gamma)
            t2 = Triangular(-1 / gamma, Y, gamma, NCPoly())
            stack[-1] = compose_triangular(stack[-1], t1)
            cur = compose_triangular(t2, cur)
    return NormalForm(tuple([cur] + stack[::-1]))


def apply_normal_form(nf: NormalForm) -> ZEndomorphism:
    return apply_word(nf.to_word())


def is_identity(word: Sequence[Generator]) -> bool:
    return apply_word(word).is_identity()


def _nest(qs: Sequence[NCPoly], start: NCPoly) -> NCPoly:
    """``qs[0](qs[1](... qs[-1](start) ...))`` with each q a polynomial in y, z."""
    s = start
    for q in reversed(qs):
        s = substitute(q, X, s)
    return s


def leading_case(nf: NormalForm) -> str:
    """Which branch of the leading-term formulas applies: 'A', 'B', 'C' or 'n0'."""
    if nf.is_trivial():
        raise TrivialWordError("identity normal form")
    if nf.n == 0:
        return "n0"
    p0 = nf.rhos[0].p1
    pn = nf.rhos[-1].p1
    big0 = not p0.is_zero() and poly_bidegree(p0) > (1, 0)
    bign = not pn.is_zero() and poly_bidegree(pn) > (1, 0)
    if big0 and bign:
        return "A"
    if bign and not big0 and p0.coeff("y") != 0:
        return "B"
    gamma_n = affine_coefficient(nf.rhos[-1])
    if big0 and gamma_n:
        return "C"
    raise OutsideCaseSplitError("normal form outside the cases of the leading-term formulas")


def predict_leading(nf: NormalForm) -> Tuple[NCPoly, NCPoly]:
    """Leading bihomogeneous components of both coordinates, from the p_i alone."""
    case = leading_case(nf)
    rho0 = nf.rhos[0]
    beta0 = rho0.a2
    if case == "n0":
        f = rho0.a1 * X + rho0.p1
        return leading_bicomponent(f), leading_bicomponent(beta0 * Y + rho0.p2)
    qs = [leading_bicomponent(rho.p1) for rho in nf.rhos[1:]]
    if case == "C":
        gamma_n = affine_coefficient(nf.rhos[-1])
        inner = _nest(qs[:-1], X + gamma_n * Y)
    else:
        inner = _nest(qs, Y)
    if case == "B":
        return rho0.p1.coeff("y") * inner, beta0 * inner
    q0 = leading_bicomponent(rho0.p1)
    return substitute(q0, X, inner), beta0 * inner
