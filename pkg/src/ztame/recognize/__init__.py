from .automorphism import mixed_monomial_filter, recognize_automorphism
from .coordinate import recognize_coordinate
from .decision import Decision, Verdict
from .families import sigma_h, wild_coordinate

__all__ = [
    "Decision",
    "Verdict",
    "mixed_monomial_filter",
    "recognize_automorphism",
    "recognize_coordinate",
    "sigma_h",
    "wild_coordinate",
]
