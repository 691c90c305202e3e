"""Exception types raised across the package."""


class ZTameError(ValueError):
    """Base class for all errors raised by ztame."""


class ZeroPolynomialError(ZTameError):
    pass


class NotDivisibleError(ZTameError):
    pass


class BothZeroError(ZTameError):
    pass


class NegativeIndexError(ZTameError):
    pass


class FamilyMismatchError(ZTameError):
    """Arithmetic between t-polynomials and z1,z2-polynomials."""


class NotXYHomogeneousError(ZTameError):
    pass


class IndexOverflowError(ZTameError):
    pass


class NoSolutionError(ZTameError):
    pass


class NotLinearFormError(ZTameError):
    pass


class NotLinearInXYError(ZTameError):
    pass


class TrivialWordError(ZTameError):
    pass


class OutsideCaseSplitError(ZTameError):
    """A normal form not covered by the leading-term formulas."""


class InvalidGeneratorError(ZTameError):
    pass


class ParseError(ZTameError, SyntaxError):
    """Malformed polynomial text. ``pos`` is the 0-based character offset."""

    def __init__(self, message, text="", pos=0):
        super().__init__(f"{message} at position {pos}")
        self.text = text
        self.pos = pos
        self.offset = pos + 1
        self.msg = self.args[0]

    def __str__(self):
        return self.args[0]
