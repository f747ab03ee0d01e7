"""Exception hierarchy shared by every module in the package."""


class PairsymError(Exception):
    """Base class for all errors raised by pairsym."""


class InvalidParameter(PairsymError, ValueError):
    pass


class NonInvertible(PairsymError, ArithmeticError):
    """Raised when an inverse is requested for a non-unit."""


class UndefinedDistance(PairsymError, ValueError):
    """A code needs at least two codewords to have a minimum distance."""


class ConstructionInapplicable(PairsymError, ValueError):
    """The inputs do not satisfy the hypotheses of the requested construction."""


class SeedInvalid(ConstructionInapplicable):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotConstructible(PairsymError):
    """Base for the two "no code returned" outcomes of the constructors."""

    def __init__(self, message, reason=""):
        super().__init__(message)
        self.reason = reason


class Nonexistent(NotConstructible):
    """The requested object provably does not exist."""


class Unsupported(NotConstructible):
    """No construction route in this package covers the requested parameters."""


class VerificationFailed(PairsymError):
    """A constructed code did not pass its brute-force check."""

    def __init__(self, message, code=None):
        super().__init__(message)
        self.code = code
