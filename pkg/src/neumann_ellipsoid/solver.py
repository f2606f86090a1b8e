"""Polynomial solutions of the Neumann problem on an ellipsoid.

Given compatible ``f``, find harmonic ``h`` with ``h(0) = 0`` and
``grad h . grad q = f`` on ``q = 1``.  Such an ``h`` satisfies

    f = S(h) + (q - 1) g                                          (*)

for some polynomial ``g`` with ``deg g <= deg f - 2``.  Applying ``S^-1``
to the nonconstant part of (*) and splitting by degree gives, for each k,

    S^-1(f_{k+2}) + S^-1(g_{k+2}) = h_{k+2} + S^-1(q g_k).

Taking the Laplacian removes the harmonic ``h_{k+2}`` and leaves a square
linear system for the coefficients of ``g_k``.  Sweeping k downward from
``deg f - 2`` determines ``g`` one homogeneous piece at a time; even and odd
k never interact.  ``h`` is then read off the same identity.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional

from .antilaplacian import anti_laplacian
from .ellipsoid import Ellipsoid
from .errors import IncompatibleDataError, InternalInvariantError
from .linalg import solve_square
from .poly import MultiIndex, Polynomial, monomials_of_degree, parity
from .quadrature import generalized_compatible, neumann_compatible


@dataclass(frozen=True)
class NeumannSolution:
    """Solution ``h`` together with its boundary certificate.

    ``g`` is the multiplier in ``f = S(h) + (q - 1) g``; ``laplacian_datum``
    is the prescribed ``Lap(h)`` (zero for the plain Neumann problem).
    """

    h: Polynomial
    g: Polynomial
    ellipsoid: Ellipsoid
    f: Polynomial
    laplacian_datum: Polynomial


@dataclass(frozen=True)
class VerificationReport:
    laplacian_residual: Polynomial
    boundary_remainder: Polynomial
    origin_value: Fraction

    @property
    def laplacian_ok(self) -> bool:
        return self.laplacian_residual.is_zero()

    @property
    def boundary_ok(self) -> bool:
        return self.boundary_remainder.is_zero()

    @property
    def origin_ok(self) -> bool:
        return self.origin_value == 0

    @property
    def ok(self) -> bool:
        return self.laplacian_ok and self.boundary_ok and self.origin_ok


def parity_blocks(n: int, k: int) -> List[List[MultiIndex]]:
    """Degree-k multi-indices grouped by parity, in grlex order of first member."""
    groups: Dict[tuple, List[MultiIndex]] = {}
    for alpha in monomials_of_degree(n, k):
        groups.setdefault(parity(alpha), []).append(alpha)
    return list(groups.values())


def block_image(e: Ellipsoid, alpha: MultiIndex) -> Dict[MultiIndex, Fraction]:
    """Coefficients of ``Lap(S^-1(q x^alpha))``, expanded termwise."""
    n = e.dim
    two_ab = e.eigenvalue(alpha)
    out: Dict[MultiIndex, Fraction] = {}
    for j, bj in enumerate(e.beta):
        w = bj / (two_ab + 4 * bj)
        out[alpha] = out.get(alpha, 0) + w * (4 * alpha[j] + 2)
        for l in range(n):
            al = alpha[l]
            if al < 2:
                continue
            lifted = list(alpha)
            lifted[j] += 2
            lifted[l] -= 2
            b = tuple(lifted)
            out[b] = out.get(b, 0) + w * al * (al - 1)
    return out


def _solve_block(e: Ellipsoid, block: List[MultiIndex], rhs: Polynomial) -> Dict[MultiIndex, Fraction]:
    b = [rhs.coefficient(alpha) for alpha in block]
    if not any(b):
        return {}
    row_of = {alpha: i for i, alpha in enumerate(block)}
    size = len(block)
    matrix = [[Fraction(0)] * size for _ in range(size)]
    for col, alpha in enumerate(block):
        for beta_idx, c in block_image(e, alpha).items():
            matrix[row_of[beta_idx]][col] += c
    x = solve_square(matrix, b)
    return {alpha: c for alpha, c in zip(block, x) if c}


def solve_degree_block(e: Ellipsoid, k: int, rhs: Polynomial, *, parallel: bool = False) -> Polynomial:
    """Find homogeneous ``g_k`` of degree k with ``Lap(S^-1(q g_k)) = rhs``."""
    if rhs.dim != e.dim:
        raise ValueError("dimension mismatch")
    if k < 0:
        raise ValueError("degree must be nonnegative")
    if any(sum(a) != k for a in rhs.terms):
        raise ValueError(f"right-hand side is not homogeneous of degree {k}")
    blocks = parity_blocks(e.dim, k)
    if parallel and len(blocks) > 1:
        with ThreadPoolExecutor(max_workers=min(8, len(blocks))) as pool:
            parts = list(pool.map(lambda blk: _solve_block(e, blk, rhs), blocks))
    else:
        parts = [_solve_block(e, blk, rhs) for blk in blocks]
    out: Dict[MultiIndex, Fraction] = {}
    for part in parts:
        out.update(part)
    return Polynomial._raw(e.dim, out)


def solve_neumann(e: Ellipsoid, f: Polynomial, *, parallel: bool = False) -> NeumannSolution:
    """Unique harmonic ``h`` with ``h(0) = 0`` and ``S(h) = f`` on the boundary.

    Raises :class:`IncompatibleDataError` if ``f`` fails the integral
    condition; the error carries the residual and the corrected ``f``.
    """
    if f.dim != e.dim:
        raise ValueError(f"polynomial has dimension {f.dim}, ellipsoid has {e.dim}")
    residual = neumann_compatible(e, f)
    if residual != 0:
        raise IncompatibleDataError(residual, f - residual)

    n = e.dim
    zero = Polynomial.zero(n)
    if f.is_zero():
        return NeumannSolution(zero, zero, e, f, zero)

    f_parts = dict(f.homogeneous_components())
    top = int(f.degree)
    m = top - 2

    def f_part(k: int) -> Polynomial:
        return f_parts.get(k, zero)

    def run_chain(start: int) -> Dict[int, Polynomial]:
        found: Dict[int, Polynomial] = {}
        for k in range(start, -1, -2):
            r = e.s_inverse(f_part(k + 2)) + e.s_inverse(found.get(k + 2, zero))
            found[k] = solve_degree_block(e, k, r.laplacian(), parallel=parallel)
        return found

    starts = [s for s in (m, m - 1) if s >= 0]
    if parallel and len(starts) > 1:
        with ThreadPoolExecutor(max_workers=2) as pool:
            chains = list(pool.map(run_chain, starts))
    else:
        chains = [run_chain(s) for s in starts]
    g_parts: Dict[int, Polynomial] = {}
    for chain in chains:
        g_parts.update(chain)

    if m >= 0 and g_parts[0].constant_term() != -f.constant_term():
        raise InternalInvariantError(
            f"degree-0 relation violated: g0 = {g_parts[0]}, f0 = {f.constant_term()}"
        )

    h = zero
    for j in range(1, top + 1):
        hj = e.s_inverse(f_part(j))
        if j in g_parts:
            hj = hj + e.s_inverse(g_parts[j])
        if j - 2 in g_parts:
            hj = hj - e.s_inverse_q_mul(g_parts[j - 2])
        h = h + hj
    g = zero
    for k in sorted(g_parts):
        g = g + g_parts[k]

    if not h.laplacian().is_zero():
        raise InternalInvariantError("computed h is not harmonic")
    if f - e.s_apply(h) != (e.q - 1) * g:
        raise InternalInvariantError("boundary identity f = S(h) + (q - 1) g failed")
    return NeumannSolution(h, g, e, f, zero)


def solve_generalized(e: Ellipsoid, f: Polynomial, g: Polynomial, *, parallel: bool = False) -> NeumannSolution:
    """Solve ``Lap(h) = g`` with ``S(h) = f`` on the boundary and ``h(0) = 0``.

    Reduces to :func:`solve_neumann` through an antiLaplacian of ``g``.
    """
    if f.dim != e.dim or g.dim != e.dim:
        raise ValueError("dimension mismatch")
    residual = generalized_compatible(e, f, g)
    if residual != 0:
        raise IncompatibleDataError(residual, f - residual)
    if g.is_zero():
        return solve_neumann(e, f, parallel=parallel)

    u = anti_laplacian(g)
    try:
        p = solve_neumann(e, f - e.s_apply(u), parallel=parallel)
    except IncompatibleDataError as exc:
        raise InternalInvariantError(f"reduced problem incompatible: {exc}") from exc
    h = u + p.h
    h = h - h.constant_term()
    if h.laplacian() != g:
        raise InternalInvariantError("computed h does not have the prescribed Laplacian")
    return NeumannSolution(h, p.g, e, f, g)


def verify_solution(
    e: Ellipsoid, h: Polynomial, f: Polynomial, g_datum: Optional[Polynomial] = None
) -> VerificationReport:
    """Check a candidate solution using only polynomial arithmetic and reduction."""
    target = g_datum if g_datum is not None else Polynomial.zero(e.dim)
    return VerificationReport(
        laplacian_residual=h.laplacian() - target,
        boundary_remainder=e.reduce_mod_boundary(e.s_apply(h) - f).remainder,
        origin_value=h.constant_term(),
    )
