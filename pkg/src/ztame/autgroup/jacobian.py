"""
z-Jacobians of x,y-linear endomorphisms and GE2 certificates over Q[z1, z2].

For ``f = sum a_ij z^i x z^j + sum b_ij z^i y z^j`` the z-derivatives are
``f_x = sum a_ij z1^i z2^j`` and ``f_y = sum b_ij z1^i z2^j``.  The Jacobian of
``(f, g)`` is ``[[f_x, g_x], [f_y, g_y]]`` and ``J(compose(e1, e2)) ==
J(e1) @ J(e2)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Tuple

from ..cpoly import ZBAR, CPoly, exact_divide
from ..errors import NotDivisibleError, NotLinearFormError, NotLinearInXYError
from ..ncpoly import NCPoly, is_linear_in_xy, z_part
from .generators import ZEndomorphism

Mat2 = Tuple[Tuple[CPoly, CPoly], Tuple[CPoly, CPoly]]

_ZERO = CPoly({}, ZBAR)
_ONE = CPoly.const(1, ZBAR)
IDENTITY_MATRIX: Mat2 = ((_ONE, _ZERO), (_ZERO, _ONE))


def z_derivatives(p: NCPoly) -> Tuple[CPoly, CPoly]:
    px, py = {}, {}
    for w, c in p.items():
        letters = [ch for ch in w if ch != "z"]
        if len(letters) != 1:
            raise NotLinearFormError(f"monomial {w!r} is not of the form z^i u z^j")
        i = w.index(letters[0])
        j = len(w) - i - 1
        target = px if letters[0] == "x" else py
        target[(0, i, j)] = c
    return CPoly(px, ZBAR), CPoly(py, ZBAR)


def jacobian(e: ZEndomorphism) -> Mat2:
    """``[[f_x, g_x], [f_y, g_y]]``; pure-z summands are ignored."""
    if not (is_linear_in_xy(e.f) and is_linear_in_xy(e.g)):
        raise NotLinearInXYError("endomorphism is not linear in x and y")
    fx, fy = z_derivatives(e.f - z_part(e.f))
    gx, gy = z_derivatives(e.g - z_part(e.g))
    return ((fx, gx), (fy, gy))


def mat(rows) -> Mat2:
    return tuple(tuple(c if isinstance(c, CPoly) else CPoly.const(c, ZBAR) for c in row) for row in rows)


def mat_mul(a: Mat2, b: Mat2) -> Mat2:
    return tuple(
        tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] for j in range(2)) for i in range(2)
    )


def mat_det(m: Mat2) -> CPoly:
    return m[0][0] * m[1][1] - m[0][1] * m[1][0]


def mat_product(factors: List[Mat2]) -> Mat2:
    acc = IDENTITY_MATRIX
    for f in factors:
        acc = mat_mul(acc, f)
    return acc


def elementary(i: int, j: int, q: CPoly) -> Mat2:
    """Identity plus ``q`` in position (i, j), i != j."""
    rows = [[_ONE, _ZERO], [_ZERO, _ONE]]
    rows[i][j] = q
    return mat(rows)


@dataclass
class ElementaryCertificate:
    factors: List[Mat2]

    def product(self) -> Mat2:
        return mat_product(self.factors)


@dataclass
class NotReducible:
    """No elementary row operation lowers the degrees; ``matrix`` is where it stopped."""

    matrix: Mat2
    steps: List[Tuple[int, int, CPoly]] = field(default_factory=list)


@dataclass
class NotInvertible:
    det: CPoly


def _profile(m: Mat2) -> int:
    return sum(max(int(e.degree()), 0) if e else 0 for row in m for e in row)


def _is_constant(m: Mat2) -> bool:
    return all(e.is_constant() for row in m for e in row)


def ge2_certificate(m: Mat2):
    """Write ``m`` as a product of elementary matrices and a constant matrix.

    Greedy leading-form elimination: repeatedly subtract ``q * row_j`` from
    ``row_i`` where ``q`` cancels the leading form of an entry, keeping only
    moves that strictly lower the sum of entry degrees.  Returns an
    :class:`ElementaryCertificate`, :class:`NotReducible` or
    :class:`NotInvertible`.
    """
    det = mat_det(m)
    if det.is_zero() or not det.is_constant():
        return NotInvertible(det)
    cur = m
    ops: List[Tuple[int, int, CPoly]] = []
    while not _is_constant(cur):
        here = _profile(cur)
        best = None
        for i, j in ((0, 1), (1, 0)):
            for col in (0, 1):
                a, b = cur[i][col], cur[j][col]
                if a.is_zero() or b.is_zero() or a.degree() < b.degree():
                    continue
                try:
                    q = exact_divide(a.leading_form(), b.leading_form())
                except NotDivisibleError:
                    continue
                rows = [list(cur[0]), list(cur[1])]
                rows[i] = [cur[i][c] - q * cur[j][c] for c in range(2)]
                cand = mat(rows)
                prof = _profile(cand)
                if prof < here and (best is None or prof < best[0]):
                    best = (prof, cand, (i, j, q))
        if best is None:
            return NotReducible(cur, ops)
        cur = best[1]
        ops.append(best[2])
    factors = [elementary(i, j, q) for i, j, q in ops]
    if cur != IDENTITY_MATRIX:
        factors.append(cur)
    return ElementaryCertificate(factors)
