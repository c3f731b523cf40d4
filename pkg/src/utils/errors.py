"""Exception types shared across packages."""


class ShapeError(ValueError):
    """Raised when vectors, matrices or words have incompatible dimensions."""

    pass


class InvalidArgument(ValueError):
    """Raised when an argument lies outside the range an operation accepts."""

    pass


class TooLarge(RuntimeError):
    """Raised when a computation would exceed a desk-scale size guard."""

    pass


class UnsupportedBox(ValueError):
    """Raised when a diagram contains a box the chosen evaluation cannot handle."""

    pass
