"""
Deciding whether a polynomial is the first coordinate of a z-tame automorphism.

If ``f = h(y, x + q(y, z))`` then ``f(x, 0, z) = h(0, x, z)`` has x-degree k and
the x-free part of f has y-degree k*d, where d is the y-degree of q.  The
leading component of q is recovered from the Formanek coefficients of the two
parts and removed by ``x -> x - q``; swapping x and y moves one level up the
normal form.  The choices (which sign of a root, peel or swap) are searched
depth first.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from ..autgroup.generators import TAU, Generator, Triangular, apply_word, triangular
from ..cpoly import c_product, exact_divide, gcd, rational_root, shift_indices, spread
from ..errors import NegativeIndexError, NotDivisibleError, ZeroPolynomialError
from ..formanek import power_form, star_expand, to_form
from ..ncpoly import X, Y, NCPoly, depends_only_on_z, leading_bicomponent, poly_bidegree, set_zero, substitute, swap_xy
from .decision import Decision, Verdict


def _linear_base(f: NCPoly) -> Optional[List[Generator]]:
    """Witness for ``a x + p(y, z)`` or ``b y + p(z)``."""
    a = f.coeff("x")
    rest = f - a * X
    if a and not any("x" in w for w in rest.words()):
        return [Triangular(a, rest, 1, NCPoly())]
    b = f.coeff("y")
    rest = f - b * Y
    if b and depends_only_on_z(rest):
        return [TAU, Triangular(b, rest, 1, NCPoly())]
    return None


def _peel_candidates(fx: NCPoly, fy: NCPoly, trace: List[dict], depth: int) -> List[Tuple[dict, NCPoly]]:
    """Leading components q(y, z) of the last triangular factor consistent with f.

    Each comes with the trace entry to record if the branch is explored.
    """
    u, v = leading_bicomponent(fx), leading_bicomponent(fy)
    k, l = to_form(u).n, to_form(v).n
    entry = {"depth": depth, "step": "peel", "u": str(u), "v": str(v)}
    if l % k:
        trace.append({**entry, "failure": f"degree ratio {l}/{k} is not an integer"})
        return []
    d = l // k
    theta = to_form(u).coeffs["x" * k]
    zeta = to_form(v).coeffs["y" * l]
    try:
        zeta1 = exact_divide(zeta, spread(theta, d))
        g = shift_indices(gcd(zeta1, shift_indices(zeta1, (k - 1) * d)), -(k - 1) * d)
    except (NotDivisibleError, NegativeIndexError) as exc:
        trace.append({**entry, "d": d, "failure": str(exc)})
        return []
    if g.indices() and max(g.indices()) > d:
        trace.append({**entry, "d": d, "failure": "common factor uses too many gaps"})
        return []
    try:
        c = exact_divide(zeta1, c_product(shift_indices(g, j * d) for j in range(k)))
    except NotDivisibleError as exc:
        trace.append({**entry, "d": d, "failure": str(exc)})
        return []
    if not c.is_constant():
        trace.append({**entry, "d": d, "failure": "quotient by the shifted product is not constant"})
        return []
    roots = sorted(rational_root(c.constant_value(), k), reverse=True)
    if not roots:
        trace.append({**entry, "d": d, "failure": f"{c.constant_value()} has no rational {k}-th root"})
    out = []
    for beta in roots:
        omega = g.scale(beta)
        out.append(({**entry, "d": d, "omega": str(omega)}, star_expand(power_form(omega, d))))
    return out


def _search(f: NCPoly, swapped: bool, trace: List[dict], depth: int) -> Optional[List[Generator]]:
    base = _linear_base(f)
    if base is not None:
        trace.append({"depth": depth, "step": "base", "f": str(f)})
        return base
    if depends_only_on_z(f):
        trace.append({"depth": depth, "step": "base", "failure": "polynomial in z only"})
        return None
    fx, fy = set_zero(f, "y"), set_zero(f, "x")
    if depends_only_on_z(fx) or depends_only_on_z(fy):
        trace.append({"depth": depth, "step": "ratio", "failure": "f(x,0,z) or f(0,y,z) lacks x or y"})
        return None
    a, b = poly_bidegree(fx)[0], poly_bidegree(fy)[0]
    if b % a == 0:
        before = poly_bidegree(fy)
        for entry, q in _peel_candidates(fx, fy, trace, depth):
            f1 = substitute(f, X - q, Y)
            fy1 = set_zero(f1, "x")
            if not fy1.is_zero() and poly_bidegree(fy1) >= before:
                trace.append({**entry, "failure": "no descent"})
                continue
            trace.append(entry)
            sub = _search(f1, False, trace, depth + 1)
            if sub is not None:
                return [triangular(q)] + sub
    if a % b == 0 and not swapped:
        trace.append({"depth": depth, "step": "swap"})
        sub = _search(swap_xy(f), True, trace, depth + 1)
        if sub is not None:
            return [TAU] + sub
    if b % a and a % b:
        trace.append({"depth": depth, "step": "ratio", "failure": f"degrees {a} and {b} do not divide"})
    return None


def recognize_coordinate(f: NCPoly) -> Decision:
    if f.is_zero():
        raise ZeroPolynomialError("zero polynomial is not a coordinate")
    trace: List[dict] = []
    word = _search(f, False, trace, 0)
    if word is None:
        return Decision(Verdict.NOT_Z_TAME_COORDINATE, reason="every branch failed", trace=trace)
    assert apply_word(word).f == f, "certificate does not reproduce f"
    return Decision(Verdict.TAME_COORDINATE, certificate=word, trace=trace)
