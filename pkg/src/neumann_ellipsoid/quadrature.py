"""Exact surface and volume moments on an ellipsoid.

Every moment that does not vanish by odd symmetry is a rational multiple of

    kappa = n * vol(B) / (2 * sqrt(beta_1 * ... * beta_n)),

where ``B`` is the unit ball, so integrals are represented by that rational
coefficient and compared exactly.  With ``dfr(alpha)`` defined as
``prod (alpha_j - 1)!! / (n (n+2) ... (n + |alpha| - 2))``:

    int_{dE} x^alpha / |grad q| dA = kappa * prod beta_j^(-alpha_j/2) * dfr(alpha)
    int_E    x^alpha dV            = kappa * 2 prod beta_j^(-alpha_j/2) * dfr(alpha) / (n + |alpha|)

The volume formula comes from mapping ``E`` to ``B`` and integrating the
sphere moment radially.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .ellipsoid import Ellipsoid
from .poly import MultiIndex, Polynomial, format_rational


def odd_double_factorial(m: int) -> int:
    """``m!!`` for odd ``m >= -1``, with ``(-1)!! = 1``."""
    if m < -1 or m % 2 == 0:
        raise ValueError(f"expected an odd integer >= -1, got {m}")
    result = 1
    for k in range(3, m + 1, 2):
        result *= k
    return result


def sphere_moment_ratio(alpha: MultiIndex) -> Fraction:
    """``dfr(alpha)``: unit-sphere moment of ``x^alpha`` over the sphere's area.

    Only meaningful for all-even ``alpha``.
    """
    n = len(alpha)
    num = 1
    for a in alpha:
        num *= odd_double_factorial(a - 1)
    den = 1
    for i in range(sum(alpha) // 2):
        den *= n + 2 * i
    return Fraction(num, den)


def unit_ball_volume(n: int) -> float:
    return math.pi ** (n / 2) / math.gamma(n / 2 + 1)


@dataclass(frozen=True)
class ScaledIntegral:
    """An exact rational multiple of the ellipsoid's integral unit ``kappa``."""

    coefficient: Fraction
    ellipsoid: Ellipsoid

    def unit_value(self) -> float:
        e = self.ellipsoid
        prod = math.prod(float(b) for b in e.beta)
        return e.dim * unit_ball_volume(e.dim) / (2 * math.sqrt(prod))

    def approx(self) -> float:
        """Floating approximation for display; never used in decisions."""
        return float(self.coefficient) * self.unit_value()

    def unit_text(self) -> str:
        e = self.ellipsoid
        prod = math.prod(e.beta, start=Fraction(1))
        root = _exact_sqrt(prod)
        if root is not None:
            return f"{format_rational(Fraction(e.dim) / (2 * root))}·vol(B)"
        return f"{e.dim}·vol(B)/(2√{format_rational(prod)})"

    def __str__(self) -> str:
        return f"({format_rational(self.coefficient)})·κ, κ = {self.unit_text()}"


def _exact_sqrt(x: Fraction):
    rn, rd = math.isqrt(x.numerator), math.isqrt(x.denominator)
    if rn * rn == x.numerator and rd * rd == x.denominator:
        return Fraction(rn, rd)
    return None


def _beta_weight(e: Ellipsoid, alpha: MultiIndex) -> Fraction:
    w = Fraction(1)
    for a, b in zip(alpha, e.beta):
        w /= b ** (a // 2)
    return w


def _all_even(alpha: MultiIndex) -> bool:
    return all(a % 2 == 0 for a in alpha)


def _check_index(e: Ellipsoid, alpha) -> MultiIndex:
    alpha = tuple(alpha)
    if len(alpha) != e.dim or any(a < 0 for a in alpha):
        raise ValueError(f"bad multi-index {alpha} for dimension {e.dim}")
    return alpha


def surface_moment(e: Ellipsoid, alpha: MultiIndex) -> ScaledIntegral:
    """``int_{dE} x^alpha / |grad q| dA``."""
    alpha = _check_index(e, alpha)
    if not _all_even(alpha):
        return ScaledIntegral(Fraction(0), e)
    return ScaledIntegral(_beta_weight(e, alpha) * sphere_moment_ratio(alpha), e)


def volume_moment(e: Ellipsoid, alpha: MultiIndex) -> ScaledIntegral:
    """``int_E x^alpha dV``."""
    alpha = _check_index(e, alpha)
    if not _all_even(alpha):
        return ScaledIntegral(Fraction(0), e)
    coeff = 2 * _beta_weight(e, alpha) * sphere_moment_ratio(alpha) / (e.dim + sum(alpha))
    return ScaledIntegral(coeff, e)


def surface_integral(e: Ellipsoid, f: Polynomial) -> ScaledIntegral:
    total = sum((c * surface_moment(e, a).coefficient for a, c in f.terms.items()), Fraction(0))
    return ScaledIntegral(total, e)


def volume_integral(e: Ellipsoid, g: Polynomial) -> ScaledIntegral:
    total = sum((c * volume_moment(e, a).coefficient for a, c in g.terms.items()), Fraction(0))
    return ScaledIntegral(total, e)


def neumann_compatible(e: Ellipsoid, f: Polynomial) -> Fraction:
    """Residual of the Neumann solvability condition; zero iff solvable.

    ``f - residual`` is always compatible, since the constant 1 integrates
    to exactly one unit.
    """
    return surface_integral(e, f).coefficient


def generalized_compatible(e: Ellipsoid, f: Polynomial, g: Polynomial) -> Fraction:
    """Residual ``int_{dE} f/|grad q| dA - int_E g dV`` in units of kappa."""
    return surface_integral(e, f).coefficient - volume_integral(e, g).coefficient
