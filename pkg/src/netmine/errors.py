"""Exception hierarchy shared by all netmine modules."""


class NetmineError(Exception):
    """Base class for all errors raised by this package."""


class OutOfRangeError(NetmineError, IndexError):
    """A node or link index is outside the valid dense range."""


class DuplicateLinkError(NetmineError, ValueError):
    """The requested link already exists (in either orientation if undirected)."""


class SelfLoopError(NetmineError, ValueError):
    """Self-loops are not representable in this data model."""


class ImmutableNetworkError(NetmineError, TypeError):
    """Mutation was attempted on a frozen (read-only) network."""


class ParameterError(NetmineError, ValueError):
    """An algorithm parameter violates its documented constraints."""


class UnsupportedDirectionError(NetmineError, ValueError):
    """The operation is only defined for the other directedness."""


class DivergenceError(NetmineError, ValueError):
    """A series parameter exceeds its convergence bound.

    The message names the bound so callers can pick a valid value.
    """


class NumericalError(NetmineError, ArithmeticError):
    """An iterative numerical routine failed to converge or a solve failed."""


class ParseError(NetmineError, ValueError):
    """Input text does not conform to the requested file format."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class ReferentialError(ParseError):
    """A parsed link references a node that does not exist."""


class UnknownFormatError(NetmineError, ValueError):
    """The file format could not be determined from path or content."""


class MissingAttributeError(NetmineError, KeyError):
    """A style binding or query names an attribute that does not exist."""
