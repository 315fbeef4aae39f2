"""Exception hierarchy shared by every module."""


class CircspliceError(Exception):
    """Base class for all errors raised by circsplice."""


class AlphabetError(CircspliceError, ValueError):
    """An alphabet is malformed (duplicate, reserved or non-alphanumeric letters)."""


class AlphabetMismatchError(CircspliceError, ValueError):
    """A word or rule uses a letter that is not in the relevant alphabet."""


class InvalidBoundError(CircspliceError, ValueError):
    """A length bound is out of range."""


class CompletenessError(CircspliceError, ValueError):
    """A system claimed to be complete violates one clause of the definition."""


class ClassificationError(CircspliceError, ValueError):
    """An operation was called on a system of the wrong class."""


class UnsupportedSystemError(ClassificationError):
    """The system lies outside the class this tool can decide."""


class PreconditionError(CircspliceError, ValueError):
    """An input violates a stated precondition of an operation."""


class ParseError(CircspliceError, ValueError):
    """A system or base file could not be parsed."""

    def __init__(self, message, line=None, column=None, path=None):
        self.message = message
        self.line = line
        self.column = column
        self.path = path
        super().__init__(str(self))

    def __str__(self):
        where = []
        if self.path is not None:
            where.append(str(self.path))
        if self.line is not None:
            where.append(f"line {self.line}")
        if self.column is not None:
            where.append(f"column {self.column}")
        prefix = ", ".join(where)
        return f"{prefix}: {self.message}" if prefix else self.message
