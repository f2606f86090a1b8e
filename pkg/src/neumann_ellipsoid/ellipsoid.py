"""Origin-centred ellipsoids ``q(x) = sum_j beta_j x_j^2 = 1`` and the S operator.

``S(g) = grad g . grad q`` acts diagonally on monomials,
``S(x^a) = 2 (a . beta) x^a``, so both it and its inverse on polynomials
without constant term are computed coefficientwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, NamedTuple, Tuple

from .poly import MultiIndex, Polynomial, format_rational


class BoundaryReduction(NamedTuple):
    """``p = (q - 1) * quotient + remainder``; remainder has x1-degree <= 1."""

    quotient: Polynomial
    remainder: Polynomial


@dataclass(frozen=True)
class Ellipsoid:
    beta: Tuple[Fraction, ...]

    def __post_init__(self):
        beta = tuple(Fraction(b) for b in self.beta)
        if len(beta) < 2:
            raise ValueError("an ellipsoid needs dimension n >= 2")
        if any(b <= 0 for b in beta):
            raise ValueError(f"all beta_j must be positive, got {[str(b) for b in beta]}")
        object.__setattr__(self, "beta", beta)

    @classmethod
    def parse(cls, text: str) -> "Ellipsoid":
        """Build from a literal such as ``"3,1,2"`` or ``"1/2, 5"``."""
        try:
            parts = [Fraction(s.strip()) for s in text.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad beta list {text!r}: {exc}") from None
        return cls(tuple(parts))

    @property
    def dim(self) -> int:
        return len(self.beta)

    def __str__(self) -> str:
        return ",".join(format_rational(b) for b in self.beta)

    @cached_property
    def q(self) -> Polynomial:
        n = self.dim
        return Polynomial(n, {tuple(2 if i == j else 0 for i in range(n)): b
                              for j, b in enumerate(self.beta)})

    @cached_property
    def grad_q(self) -> Tuple[Polynomial, ...]:
        return tuple(self.q.diff(j) for j in range(self.dim))

    def _check(self, p: Polynomial) -> None:
        if p.dim != self.dim:
            raise ValueError(f"polynomial has dimension {p.dim}, ellipsoid has {self.dim}")

    def eigenvalue(self, alpha: MultiIndex) -> Fraction:
        """The S-eigenvalue ``2 (alpha . beta)`` of ``x^alpha``."""
        return 2 * sum((a * b for a, b in zip(alpha, self.beta)), Fraction(0))

    def s_apply(self, g: Polynomial) -> Polynomial:
        """``grad g . grad q``."""
        self._check(g)
        return Polynomial._raw(self.dim, {a: self.eigenvalue(a) * c for a, c in g.terms.items()})

    def s_inverse(self, g: Polynomial) -> Polynomial:
        """Inverse of :meth:`s_apply` on polynomials vanishing at the origin."""
        self._check(g)
        if g.constant_term() != 0:
            raise ValueError("S^-1 is undefined on polynomials with a nonzero constant term")
        return Polynomial._raw(self.dim, {a: c / self.eigenvalue(a) for a, c in g.terms.items()})

    def s_inverse_q_mul(self, g: Polynomial) -> Polynomial:
        """``S^-1(q g)`` by the closed form, without forming ``q g``."""
        self._check(g)
        n = self.dim
        out: Dict[MultiIndex, Fraction] = {}
        for a, c in g.terms.items():
            two_ab = self.eigenvalue(a)
            for j, b in enumerate(self.beta):
                e = a[:j] + (a[j] + 2,) + a[j + 1:]
                out[e] = out.get(e, 0) + b * c / (two_ab + 4 * b)
        return Polynomial._raw(n, out)

    def reduce_mod_boundary(self, p: Polynomial) -> BoundaryReduction:
        """Divide by ``q - 1`` eliminating ``x1^2`` (leading term ``beta_1 x1^2``).

        Uses ``x1^2 = (1 - sum_{j>=2} beta_j x_j^2) / beta_1 + (q - 1) / beta_1``.
        """
        self._check(p)
        n = self.dim
        b1 = self.beta[0]
        work: Dict[MultiIndex, Fraction] = dict(p.terms)
        quotient: Dict[MultiIndex, Fraction] = {}
        top = max((a[0] for a in work), default=0)
        for level in range(top, 1, -1):
            batch = [(a, c) for a, c in work.items() if a[0] == level and c != 0]
            for a, c in batch:
                del work[a]
                t = c / b1
                base = (a[0] - 2,) + a[1:]
                quotient[base] = quotient.get(base, 0) + t
                work[base] = work.get(base, 0) + t
                for j in range(1, n):
                    e = base[:j] + (base[j] + 2,) + base[j + 1:]
                    work[e] = work.get(e, 0) - t * self.beta[j]
        return BoundaryReduction(Polynomial._raw(n, quotient), Polynomial._raw(n, work))

    def vanishes_on_boundary(self, p: Polynomial) -> bool:
        return self.reduce_mod_boundary(p).remainder.is_zero()

