"""Exception hierarchy shared by every module of the package."""


class GrassmannTopsError(Exception):
    """Base class for all errors raised by grassmann_tops."""


class FieldError(GrassmannTopsError):
    """The requested field cannot be constructed."""


class NotPrimePower(FieldError):
    pass


class UnsupportedExtension(FieldError):
    pass


class DivisionByZero(GrassmannTopsError, ZeroDivisionError):
    pass


class AmbientMismatch(GrassmannTopsError):
    """Two subspaces or codes do not live in the same ambient space."""


class TooLarge(GrassmannTopsError):
    """An enumeration guard was exceeded."""


class PreconditionError(GrassmannTopsError):
    """Input violates a mathematical precondition (exit code 3 in the CLI)."""


class RankDeficient(PreconditionError):
    pass


class NotProjective(PreconditionError):
    pass


class ParameterRange(PreconditionError):
    pass


class ZeroVector(PreconditionError):
    pass


class EmptyY(PreconditionError):
    pass


class EmptyClique(PreconditionError):
    pass


class ParseError(GrassmannTopsError):
    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}"
            if column is not None:
                where += f", column {column}"
            where += ": "
        super().__init__(where + message)


class RangeError(ParseError):
    """A matrix entry lies outside [0, q)."""
