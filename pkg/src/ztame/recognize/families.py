from __future__ import annotations

from ..autgroup.generators import ZEndomorphism
from ..ncpoly import X, Y, Z, NCPoly, substitute

COMMUTATOR = X * Z - Z * Y


def sigma_h(h: NCPoly) -> ZEndomorphism:
    """``(x + z h(xz - zy, z), y + h(xz - zy, z) z)`` for h written in x (standing for t) and z."""
    if any("y" in w for w in h.words()):
        raise ValueError("h must be a polynomial in t and z")
    w = substitute(h, COMMUTATOR, Y)
    return ZEndomorphism(X + Z * w, Y + w * Z)


def wild_coordinate(h: NCPoly, outer_z: bool = True) -> NCPoly:
    """``x + z h(xz - zy, z)``, or ``x + h(xz - zy, z)`` when ``outer_z`` is False."""
    w = substitute(h, COMMUTATOR, Y)
    return X + (Z * w if outer_z else w)
