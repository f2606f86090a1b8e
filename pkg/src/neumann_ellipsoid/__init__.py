"""Exact polynomial solutions of the Neumann problem on ellipsoids."""

from .antilaplacian import anti_laplacian
from .ellipsoid import BoundaryReduction, Ellipsoid
from .errors import (
    GaugeViolationError,
    IncompatibleDataError,
    InternalInvariantError,
    NeumannError,
    ParseError,
    SingularSystemError,
)
from .mri import PolyVectorField, boundary_data, divergence, electric_field
from .parser import parse_polynomial
from .poly import ZERO_DEGREE, Polynomial, variables
from .quadrature import (
    ScaledIntegral,
    generalized_compatible,
    neumann_compatible,
    surface_integral,
    surface_moment,
    volume_integral,
    volume_moment,
)
from .solver import (
    NeumannSolution,
    VerificationReport,
    solve_degree_block,
    solve_generalized,
    solve_neumann,
    verify_solution,
)

__all__ = [
    "BoundaryReduction",
    "Ellipsoid",
    "GaugeViolationError",
    "IncompatibleDataError",
    "InternalInvariantError",
    "NeumannError",
    "NeumannSolution",
    "ParseError",
    "PolyVectorField",
    "Polynomial",
    "ScaledIntegral",
    "SingularSystemError",
    "VerificationReport",
    "ZERO_DEGREE",
    "anti_laplacian",
    "boundary_data",
    "divergence",
    "electric_field",
    "generalized_compatible",
    "neumann_compatible",
    "parse_polynomial",
    "solve_degree_block",
    "solve_generalized",
    "solve_neumann",
    "surface_integral",
    "surface_moment",
    "variables",
    "verify_solution",
    "volume_integral",
    "volume_moment",
]
