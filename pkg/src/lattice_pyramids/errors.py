"""Exception types shared across the package."""

from .linalg import SingularMatrixError


class InvariantError(AssertionError):
    """An identity that must hold exactly failed; signals a computation bug."""


__all__ = ["InvariantError", "SingularMatrixError"]
