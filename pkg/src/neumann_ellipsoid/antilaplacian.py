"""Constructive antiLaplacian.

For a monomial ``x^a``, with ``d = (a_1 + 1)(a_1 + 2)``,

    Lap(x1^2 x^a / d) = x^a + sum_{k>=2} a_k (a_k - 1) / d * x1^2 x^a / x_k^2

so an antiLaplacian of ``x^a`` is ``x1^2 x^a / d`` minus the weighted
antiLaplacians of the correction monomials.  Each correction moves two
units of degree from some ``x_k`` (``k >= 2``, ``a_k >= 2``) into ``x1``,
so the recursion ends once every ``a_k`` with ``k >= 2`` is 0 or 1.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict

from .poly import MultiIndex, Polynomial

_Terms = Dict[MultiIndex, Fraction]


def _monomial_antilaplacian(alpha: MultiIndex, memo: Dict[MultiIndex, _Terms]) -> _Terms:
    cached = memo.get(alpha)
    if cached is not None:
        return cached
    a1 = alpha[0]
    d = (a1 + 1) * (a1 + 2)
    lifted = (a1 + 2,) + alpha[1:]
    out: _Terms = {lifted: Fraction(1, d)}
    for k in range(1, len(alpha)):
        ak = alpha[k]
        if ak < 2:
            continue
        w = Fraction(ak * (ak - 1), d)
        shifted = lifted[:k] + (ak - 2,) + lifted[k + 1:]
        for b, c in _monomial_antilaplacian(shifted, memo).items():
            out[b] = out.get(b, 0) - w * c
    out = {b: c for b, c in out.items() if c != 0}
    memo[alpha] = out
    return out


def anti_laplacian(g: Polynomial) -> Polynomial:
    """Return ``u`` with ``Lap(u) = g`` and ``deg u = deg g + 2``."""
    memo: Dict[MultiIndex, _Terms] = {}
    out: _Terms = {}
    for alpha, c in g.terms.items():
        for b, d in _monomial_antilaplacian(alpha, memo).items():
            out[b] = out.get(b, 0) + c * d
    return Polynomial._raw(g.dim, out)
