"""
Formanek's module structure on polynomials homogeneous in x and y.

The polynomials of joint x,y-degree n form a free Q[t0..tn]-module whose
basis is the 2**n words in x, y.  The monomial ``z^a0 u1 z^a1 ... un z^an``
corresponds to ``t0^a0 ... tn^an`` times the basis word ``u1...un``; so t_i
records the run of z's in gap i.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Mapping, Tuple

from .cpoly import T, CPoly, c_product, exact_divide, shift_indices, spread
from .errors import IndexOverflowError, NoSolutionError, NotDivisibleError, NotXYHomogeneousError
from .ncpoly import NCPoly


def _split(word: str) -> Tuple[str, Tuple[int, ...]]:
    """``zzxzy`` -> (``xy``, (2, 1, 0))."""
    letters = []
    gaps = [0]
    for ch in word:
        if ch == "z":
            gaps[-1] += 1
        else:
            letters.append(ch)
            gaps.append(0)
    return "".join(letters), tuple(gaps)


@dataclass(frozen=True)
class FormanekForm:
    n: int
    coeffs: Mapping[str, CPoly]

    def __post_init__(self):
        clean = {}
        for w, c in self.coeffs.items():
            if len(w) != self.n or set(w) - {"x", "y"}:
                raise ValueError(f"basis word {w!r} does not have length {self.n} over x, y")
            if c.family != T:
                raise ValueError("coefficients must be t-polynomials")
            if c.indices() and max(c.indices()) > self.n:
                raise IndexOverflowError(f"coefficient of {w} uses t_{max(c.indices())} > t_{self.n}")
            if c:
                clean[w] = c
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other):
        if not isinstance(other, FormanekForm):
            return NotImplemented
        return self.n == other.n and dict(self.coeffs) == dict(other.coeffs)

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def is_zero(self) -> bool:
        return not self.coeffs

    def to_json(self) -> Dict[str, str]:
        return {w: str(c) for w, c in sorted(self.coeffs.items())}


def to_form(p: NCPoly) -> FormanekForm:
    """Coordinates of an x,y-homogeneous polynomial in the free module H_n."""
    if p.is_zero():
        raise NotXYHomogeneousError("zero polynomial has no degree")
    degrees = {len(w) - w.count("z") for w in p.words()}
    if len(degrees) != 1:
        raise NotXYHomogeneousError(f"mixed x,y-degrees {sorted(degrees)}")
    (n,) = degrees
    acc: Dict[str, Dict[Tuple[int, ...], Fraction]] = {}
    for w, c in p.items():
        basis, gaps = _split(w)
        acc.setdefault(basis, {})[gaps] = c
    return FormanekForm(n, {b: CPoly(ts, T) for b, ts in acc.items()})


def star_expand(form: FormanekForm) -> NCPoly:
    """Inverse of :func:`to_form`."""
    terms: Dict[str, Fraction] = {}
    for basis, coeff in form.coeffs.items():
        for exps, c in coeff.items():
            gaps = list(exps) + [0] * (form.n + 1 - len(exps))
            parts = ["z" * gaps[0]]
            for i, u in enumerate(basis):
                parts.append(u)
                parts.append("z" * gaps[i + 1])
            terms["".join(parts)] = c
    return NCPoly(terms)


def power_form(omega: CPoly, d: int) -> FormanekForm:
    """The form ``omega * y^d``, i.e. a polynomial q(y, z) in H_d."""
    return FormanekForm(d, {"y" * d: omega})


def outer_compose(omega: CPoly, d: int, v: FormanekForm) -> FormanekForm:
    """Form of q(v, z) where q = omega * y^d.

    Gap j of q sits between the j-th and (j+1)-th copies of v, which is gap
    j*k of the result; the i-th copy of v is shifted by (i-1)*k.
    """
    if d < 1:
        raise ValueError("d must be positive")
    if omega.indices() and max(omega.indices()) > d:
        raise IndexOverflowError(f"omega uses t_{max(omega.indices())} but d = {d}")
    k = v.n
    outer = spread(omega, k)
    words = sorted(v.coeffs)
    shifted = [{w: shift_indices(v.coeffs[w], j * k) for w in words} for j in range(d)]
    out: Dict[str, CPoly] = {}

    def extend(j: int, word: str, coeff: CPoly):
        if j == d:
            out[word] = coeff
            return
        for w in words:
            extend(j + 1, word + w, coeff * shifted[j][w])

    extend(0, "", outer)
    return FormanekForm(k * d, out)


def solve_outer(u: FormanekForm, v: FormanekForm) -> Tuple[CPoly, int]:
    """Find (omega, d) with outer_compose(omega, d, v) == u.

    Raises NoSolutionError when the degrees do not divide, the trial
    division fails, or the candidate does not reproduce u.
    """
    if u.n < 1 or v.n < 1:
        raise ValueError("forms must have positive degree")
    if v.is_zero() or u.is_zero():
        raise NoSolutionError("zero form")
    k, l = v.n, u.n
    if l % k:
        raise NoSolutionError(f"degree {l} is not a multiple of {k}")
    d = l // k
    w = min(v.coeffs)
    target = u.coeffs.get(w * d)
    if target is None:
        raise NoSolutionError(f"no {w * d} component")
    inner = c_product((shift_indices(v.coeffs[w], j * k) for j in range(d)), T)
    try:
        spread_omega = exact_divide(target, inner)
    except NotDivisibleError:
        raise NoSolutionError(f"coefficient of {w * d} is not divisible by the {w} power") from None
    if any(i % k for i in spread_omega.indices()):
        raise NoSolutionError("quotient involves gaps inside a copy of v")
    omega = spread_omega.rename(lambda i: i // k)
    if outer_compose(omega, d, v) != u:
        raise NoSolutionError("candidate does not reproduce the leading component")
    return omega, d
