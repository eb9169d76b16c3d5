"""Exception hierarchy shared by all ghckit modules."""


class GhckitError(Exception):
    """Base class for all errors raised by ghckit."""


class InputError(GhckitError, ValueError):
    """Invalid caller input (bad dimensions, broken preconditions, malformed data)."""


class UnsupportedTypeError(GhckitError):
    """The requested operation is only defined for a restricted family of root systems."""


class RegularIntegralCase(GhckitError):
    """The degree in the regular integral case needs an alternating-sum formula
    that is out of scope; callers must handle this case themselves."""


class InternalError(GhckitError, RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""
