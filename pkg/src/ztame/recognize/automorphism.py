"""
Deciding whether a z-endomorphism is a z-tame automorphism.

The procedure repeatedly removes the leading bihomogeneous component of the
coordinate of larger bidegree by subtracting ``q(other coordinate, z)``; the
form of q is found with Formanek's module structure.  When both leading
components are linear the map is a linear map followed by a translation.
"""

from __future__ import annotations

from typing import List, Tuple

from ..autgroup.generators import TAU, Affine, Generator, Triangular, ZEndomorphism, apply_word, triangular
from ..errors import NoSolutionError
from ..formanek import power_form, solve_outer, star_expand, to_form
from ..ncpoly import X, Y, NCPoly, depends_only_on_z, leading_bicomponent, poly_bidegree, substitute
from .decision import Decision, Verdict


def _reduce_by(top: NCPoly, other: NCPoly) -> Tuple[NCPoly, int, NCPoly]:
    """q(y, z) with leading(top) == q(leading(other)); returns (q, d, omega)."""
    omega, d = solve_outer(to_form(leading_bicomponent(top)), to_form(leading_bicomponent(other)))
    return star_expand(power_form(omega, d)), d, omega


def _undo(pending: List[Tuple[int, NCPoly]]) -> List[Generator]:
    """Generators that rebuild the original pair from the reduced one."""
    word: List[Generator] = []
    for step, q in reversed(pending):
        word.extend([triangular(q)] if step == 2 else [TAU, triangular(q), TAU])
    return word


def recognize_automorphism(e: ZEndomorphism) -> Decision:
    f, g = e.f, e.g
    trace: List[dict] = []
    # (step, q) per reduction; consecutive steps of one kind add up
    pending: List[Tuple[int, NCPoly]] = []
    last = None
    while True:
        if depends_only_on_z(f) or depends_only_on_z(g):
            which = "f" if depends_only_on_z(f) else "g"
            trace.append({"step": 0, "failure": f"{which} depends on z only"})
            return Decision(Verdict.NOT_AUTOMORPHISM, reason=f"step 0: {which} depends on z only", trace=trace)
        bu, bv = poly_bidegree(f), poly_bidegree(g)
        total = (bu[0] + bv[0], bu[1] + bv[1])
        assert last is None or total < last, "bidegree did not decrease"
        last = total
        u, v = leading_bicomponent(f), leading_bicomponent(g)
        entry = {"bideg_f": list(bu), "bideg_g": list(bv), "u": str(u), "v": str(v)}

        if bu == (1, 0) and bv == (1, 0):
            a, b, c, d = u.coeff("x"), u.coeff("y"), v.coeff("x"), v.coeff("y")
            if a * d - b * c == 0:
                trace.append({**entry, "step": 1, "failure": "linear parts are dependent"})
                return Decision(Verdict.NOT_AUTOMORPHISM, reason="step 1: linear parts are dependent", trace=trace)
            trace.append({**entry, "step": 1, "result": "linear map and translation"})
            base: List[Generator] = []
            if (a, b, c, d) != (1, 0, 0, 1):
                base.append(Affine(((a, c), (b, d))))
            translation = Triangular(1, f - u, 1, g - v)
            if not translation.is_identity():
                base.append(translation)
            word = base + _undo(pending)
            assert apply_word(word) == e, "certificate does not recompose"
            return Decision(Verdict.TAME_AUTOMORPHISM, certificate=word, trace=trace)

        moves = []
        if bu > (1, 0) and bu >= bv:
            moves.append(2)
        if bv > (1, 0) and bv >= bu:
            moves.append(3)
        done = False
        for step in moves:
            top, other = (f, g) if step == 2 else (g, f)
            try:
                q, deg, omega = _reduce_by(top, other)
            except NoSolutionError as exc:
                trace.append({**entry, "step": step, "failure": str(exc)})
                continue
            trace.append({**entry, "step": step, "d": deg, "omega": str(omega), "q": str(q)})
            if step == 2:
                f = f - substitute(q, X, g)
            else:
                g = g - substitute(q, X, f)
            if pending and pending[-1][0] == step:
                pending[-1] = (step, pending[-1][1] + q)
            else:
                pending.append((step, q))
            done = True
            break
        if not done:
            return Decision(Verdict.NOT_Z_TAME, reason="leading component is not q(other leading component)", trace=trace)


def mixed_monomial_filter(e: ZEndomorphism) -> Decision:
    """Maps ``(x + u, y + v)`` with every monomial of u, v containing both x and y are not automorphisms."""
    u, v = e.f - X, e.g - Y
    if u.is_zero() and v.is_zero():
        return Decision(Verdict.INCONCLUSIVE, reason="identity map")
    for w in list(u.words()) + list(v.words()):
        if "x" not in w or "y" not in w:
            return Decision(Verdict.INCONCLUSIVE, reason=f"monomial {w or '1'} does not contain both x and y")
    return Decision(Verdict.NOT_AUTOMORPHISM, reason="all monomials of u and v contain both x and y")
