"""Exception hierarchy shared by every revcomp module."""

from __future__ import annotations


class RevcompError(ValueError):
    """Base class for all toolkit errors."""


class UnknownGate(RevcompError):
    pass


class DuplicateGate(RevcompError):
    pass


class BadArity(RevcompError):
    pass


class NonBijective(RevcompError):
    """Raised when a truth table is not a permutation.

    ``word`` holds the first output word that appears twice (or the first
    out-of-range word).
    """

    def __init__(self, message: str, word: int):
        super().__init__(message)
        self.word = word


class UnknownPort(RevcompError):
    pass


class InvalidCircuit(RevcompError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        summary = "; ".join(str(d) for d in self.diagnostics[:5])
        super().__init__(f"circuit failed validation: {summary}")


class MissingInput(RevcompError):
    pass


class UnknownInput(RevcompError):
    pass


class WidthTooLarge(RevcompError):
    pass


class BadIndex(RevcompError):
    pass


class WidthMismatch(RevcompError):
    pass


class NTooSmall(RevcompError):
    pass


class NTooLarge(RevcompError):
    pass


class ShapeMismatch(RevcompError):
    pass


class RangeError(RevcompError):
    pass


class NetlistSyntaxError(RevcompError):
    """Syntax error in a text document, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


class MissingWidth(NetlistSyntaxError):
    pass
