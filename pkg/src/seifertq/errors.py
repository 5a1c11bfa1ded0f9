"""Exception types shared across the package."""


class SeifertQError(ValueError):
    """Base class for all domain errors raised by this package."""


class DimensionError(SeifertQError):
    """A matrix or vector has a size that violates an operation's contract."""


class BasisChangeError(SeifertQError):
    """A base-change matrix is not unimodular."""


class PreconditionError(SeifertQError):
    """An input fails a documented precondition."""


class UnsupportedDegreeError(SeifertQError):
    """A clasper configuration has a degree the evaluator does not cover."""


class NotInKernelError(SeifertQError):
    """An element has nonzero augmentation where a kernel element is required."""


class ParseError(SeifertQError):
    """Malformed textual input; ``position`` is the character offset."""

    def __init__(self, message, position):
        super().__init__("%s (at position %d)" % (message, position))
        self.position = position
