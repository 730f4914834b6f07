"""Exception hierarchy shared across the package.

``InputError`` covers anything the caller got wrong (the CLI maps it to exit
code 2).  ``InternalError`` signals that an identity which must hold by
construction failed, i.e. a logic bug (exit code 1).
"""


class InputError(ValueError):
    pass


class RegularityError(InputError):
    """A direction vector with repeated entries (not a regular torus element)."""


class CapExceededError(InputError):
    """An oracle was asked to work beyond its configured size cap."""


class PrecisionError(InputError):
    """A truncated series was read beyond its order."""


class InternalError(RuntimeError):
    pass


class InexactDivisionError(InternalError):
    pass
