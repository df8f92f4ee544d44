"""Exception types shared across the package."""


class LeavittError(Exception):
    """Base class for every error raised by this library."""


class GraphError(LeavittError):
    """Invalid graph construction, or a reference to an unknown vertex or edge."""


class PathError(LeavittError):
    """Edge sequence that does not compose, or references unknown edges."""


class ParseError(LeavittError):
    """Malformed graph document or element expression."""


class PreconditionError(LeavittError):
    """An operation was called outside its stated contract."""


class CapExhaustedError(LeavittError):
    """A bounded witness search hit its cap without finding a witness.

    The search history is attached so callers can inspect what was tried.
    """

    def __init__(self, message, diagnostics=None):
        super().__init__(message)
        self.diagnostics = diagnostics or {}
