"""Exception hierarchy shared by every layer of the package."""


class WBCError(Exception):
    """Base class for all errors raised by :mod:`wbc`."""


class RingMismatchError(WBCError, ValueError):
    """Operands live in different rings or have different sizes."""


class NotInvertibleError(WBCError, ValueError):
    """Inverse requested for a singular element."""


class NonFieldError(WBCError, ValueError):
    """Operation is only defined over field coefficients."""


class PreconditionError(WBCError):
    """A documented hypothesis of an operation does not hold."""


class InternalInconsistencyError(WBCError, AssertionError):
    """A constructed value failed its own defining equations.

    This always signals a bug in a solver, never a missing inverse.
    """


class BudgetExceededError(WBCError):
    """An enumeration would exceed the configured candidate budget."""
