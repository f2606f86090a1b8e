"""Exception types shared across the package."""

from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .poly import Polynomial


class NeumannError(Exception):
    """Base class for errors raised by this package."""


class IncompatibleDataError(NeumannError):
    """Boundary data fails the solvability integral condition.

    ``residual`` is the exact rational value of the defect in units of the
    ellipsoid's integral unit; ``adjusted_f`` is the data with the residual
    subtracted as a constant, which is always compatible.
    """

    def __init__(self, residual: Fraction, adjusted_f: "Polynomial"):
        self.residual = residual
        self.adjusted_f = adjusted_f
        super().__init__(
            f"incompatible boundary data: residual {residual}; "
            f"compatible alternative f = {adjusted_f}"
        )


class InternalInvariantError(NeumannError):
    """A guaranteed-solvable step failed; indicates a bug, not bad input."""


class SingularSystemError(InternalInvariantError):
    pass


class GaugeViolationError(NeumannError):
    """Vector field is not divergence free."""

    def __init__(self, divergence: "Polynomial"):
        self.divergence = divergence
        super().__init__(f"field violates the Coulomb gauge: divergence = {divergence}")


class ParseError(NeumannError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"{message} (line {line}, column {column})")
