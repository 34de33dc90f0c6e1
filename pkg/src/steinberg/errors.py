"""Exception hierarchy.

Everything raised on purpose derives from :class:`SteinbergError`.  The CLI maps
:class:`ParseError` to exit code 2 and every other subclass to exit code 1.
"""


class SteinbergError(Exception):
    """Base class for domain errors."""


class ParseError(SteinbergError):
    """Malformed input text; carries a 1-based line and column."""

    def __init__(self, message, line=1, column=1):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class NoSourcesViolation(SteinbergError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} receives no edge")
        self.vertex = vertex


class DuplicateId(SteinbergError):
    pass


class UnknownVertex(SteinbergError):
    pass


class UnknownEdge(SteinbergError):
    pass


class NotComposable(SteinbergError):
    pass


# The parser-facing name used when a written path is not a path.
NotComposablePath = NotComposable


class NotACycle(SteinbergError):
    pass


class NotInGroupoid(SteinbergError):
    """The triple (x, n, y) has no witness k - l = n with shift^k x = shift^l y."""


class UnknownSymbol(SteinbergError):
    pass


class DimensionMismatch(SteinbergError):
    pass


class DepthInsufficient(SteinbergError):
    pass


class BaseMismatch(SteinbergError):
    pass


class ZeroElement(SteinbergError):
    pass


class Exhausted(SteinbergError):
    def __init__(self, depth):
        super().__init__(f"no certificate found up to depth {depth}")
        self.depth = depth


class NotInjective(SteinbergError):
    pass


class ImageMismatch(SteinbergError):
    pass


class NotSurjective(SteinbergError):
    pass


class NotEdgeShift(SteinbergError):
    pass


class AxiomViolation(SteinbergError):
    """A generator assignment fails R1, R2 or R3 at the checked depth."""
