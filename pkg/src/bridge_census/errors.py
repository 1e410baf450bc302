"""Exception hierarchy for bridge_census."""


class BridgeCensusError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(BridgeCensusError, ValueError):
    """A tuple string contains a token that is not an integer."""


class ValidationError(BridgeCensusError, ValueError):
    """A tuple violates the even continued fraction constraints."""


class DegenerateFraction(BridgeCensusError, ArithmeticError):
    """A continued fraction hit a zero intermediate denominator."""


class LimitExceeded(BridgeCensusError):
    """An enumeration safety cap was reached."""


class DomainError(BridgeCensusError, ValueError):
    """A formula was evaluated outside its domain (e.g. c < 3)."""


class ModeMismatch(BridgeCensusError, AssertionError):
    """The predicted mode is not a maximizer of the braid-index row."""


class ModeTieWarning(UserWarning):
    """More than one braid index attains the maximum of a k-row."""
