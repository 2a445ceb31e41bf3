"""Exception types shared across the package."""


class RightLoopError(Exception):
    """Base class for all errors raised by rightloops."""


class InvalidInput(RightLoopError, ValueError):
    """Malformed table, file, permutation or argument."""


class InvalidTable(InvalidInput):
    pass


class PreconditionError(RightLoopError, ValueError):
    """An operation was called on an object lacking a required property."""


class CapExceeded(RightLoopError):
    def __init__(self, what, cap, size=None):
        self.what = what
        self.cap = cap
        self.size = size
        msg = f"{what} exceeds cap {cap}"
        if size is not None:
            msg += f" (needs {size})"
        super().__init__(msg)


class InternalError(RightLoopError, AssertionError):
    """A verified theorem failed on concrete data; this signals a bug."""
