"""Exception types shared across the package."""


class AmbientMismatchError(ValueError):
    """Operands live over different ambient variable lists."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured resource budget."""


class NotArtinianError(RuntimeError):
    """A staircase enumeration ran past its degree bound."""


class EquivarianceError(ValueError):
    """A permutation does not leave the defining ideal invariant."""


class NonReducedBasisError(ValueError):
    """An operation required a reduced Groebner basis."""
