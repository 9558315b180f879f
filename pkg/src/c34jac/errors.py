"""Exception hierarchy shared by every module."""


class C34Error(Exception):
    """Base class for all errors raised by this package."""


class NonPrime(C34Error, ValueError):
    pass


class BadCharacteristic(C34Error, ValueError):
    pass


class DivisionByZero(C34Error, ZeroDivisionError):
    pass


class SingularScreenFailed(C34Error, ValueError):
    """f, f_x and f_y share a zero over the prime field."""


class FieldTooLarge(C34Error, ValueError):
    """An exhaustive scan was requested over a field above the enumeration cap."""


class Exhausted(C34Error, RuntimeError):
    """A bounded random search ran out of retries."""


class DuplicatePointsUnsupported(C34Error, ValueError):
    pass


class InvalidDivisor(C34Error, ValueError):
    """Six coefficients that do not describe a degree-3 divisor on the curve."""


class Atypical(C34Error, ArithmeticError):
    """A pivot required by the fast formulas vanished.

    ``stage`` names the operation that failed and ``pivot`` the quantity
    that turned out to be zero, e.g. ``Atypical("kernel_m", "U")``.
    """

    def __init__(self, stage, pivot, detail=""):
        self.stage = stage
        self.pivot = pivot
        msg = f"atypical input at {stage}: {pivot} = 0"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class SameDivisor(Atypical):
    """add/build_m_add was handed two equal representations; use doubling."""

    def __init__(self, stage="build_m_add"):
        super().__init__(stage, "F' - F", "operands are equal; use doubling")


class IdentityResult(Atypical):
    """The result (or an intermediate) is the zero class, which has no typical form."""

    def __init__(self, stage, detail=""):
        super().__init__(stage, "identity", detail)


class NotSplit(C34Error):
    """The residual zeros of s are not three distinct rational points."""
