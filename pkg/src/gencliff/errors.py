"""Exception hierarchy; the CLI maps these onto exit codes."""
from __future__ import annotations


class GencliffError(Exception):
    exit_code = 1


class PreconditionError(GencliffError, ValueError):
    """A hypothesis of the underlying theorem does not hold; the tool refuses."""

    exit_code = 2

    def __init__(self, message: str, clause: str | None = None):
        super().__init__(message)
        self.clause = clause


class VerificationError(GencliffError, AssertionError):
    """An identity that must hold failed to reduce to zero."""

    exit_code = 3

    def __init__(self, message: str, failures=None):
        super().__init__(message)
        self.failures = list(failures or [])


class ParseError(GencliffError, ValueError):
    exit_code = 1

    def __init__(self, message: str, text: str = "", pos: int | None = None):
        if pos is not None:
            message = f"{message} at position {pos}" + (f": {text[:pos]}<!>{text[pos:]}" if text else "")
        super().__init__(message)
        self.pos = pos
