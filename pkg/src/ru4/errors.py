"""Exception hierarchy.  Each class carries the CLI exit status it maps to."""


class Ru4Error(Exception):
    exit_code = 1


class UsageError(Ru4Error, ValueError):
    exit_code = 2


class EvenLength(UsageError):
    """Code length must be odd."""


class NotAUnit(Ru4Error, ArithmeticError):
    pass


class NonMonicDivisor(Ru4Error, ValueError):
    pass


class BothZero(Ru4Error, ValueError):
    pass


class NotADivisor(Ru4Error, ValueError):
    pass


class LiftVerificationFailed(Ru4Error, RuntimeError):
    pass


class NotCoprime(Ru4Error, ValueError):
    pass


class BadLength(Ru4Error, ValueError):
    pass


class LengthMismatch(Ru4Error, ValueError):
    pass


class NotClosed(Ru4Error, ValueError):
    pass


class ProfileLengthMismatch(Ru4Error, ValueError):
    pass


class DivisibilityViolated(Ru4Error, ValueError):
    pass


class NoCanonicalForm(Ru4Error, ValueError):
    pass


class NotMaterialized(Ru4Error, ValueError):
    pass


class TooLarge(Ru4Error):
    """A computation would exceed its enumeration budget."""

    exit_code = 3


BudgetExceeded = TooLarge
