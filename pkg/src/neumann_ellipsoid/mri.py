"""Induced electric field in an ellipsoidal body model.

With the Coulomb gauge ``div A = 0`` the induced field is
``E = -grad V - dA/dt`` where ``V`` is harmonic and the normal component
of ``E`` vanishes on the body surface.  That makes ``V`` the solution of a
Neumann problem with data ``f = -(dA/dt) . grad q``.  Time dependence is
left to the caller: ``dA/dt`` here is its spatial polynomial part at one
instant.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence, Tuple

from .ellipsoid import Ellipsoid
from .errors import GaugeViolationError, InternalInvariantError
from .poly import Polynomial, dot
from .quadrature import neumann_compatible
from .solver import solve_neumann


@dataclass(frozen=True)
class PolyVectorField:
    components: Tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a vector field needs at least one component")
        n = comps[0].dim
        if len(comps) != n or any(c.dim != n for c in comps):
            raise ValueError("vector field must have one component per dimension")
        object.__setattr__(self, "components", comps)

    @classmethod
    def zero(cls, dim: int) -> "PolyVectorField":
        return cls(tuple(Polynomial.zero(dim) for _ in range(dim)))

    @property
    def dim(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[Polynomial]:
        return iter(self.components)

    def __len__(self) -> int:
        return len(self.components)

    def __getitem__(self, i: int) -> Polynomial:
        return self.components[i]

    def __neg__(self) -> "PolyVectorField":
        return PolyVectorField(tuple(-c for c in self.components))

    def __add__(self, other: "PolyVectorField") -> "PolyVectorField":
        return PolyVectorField(tuple(a + b for a, b in zip(self, other)))


def _as_field(w) -> PolyVectorField:
    return w if isinstance(w, PolyVectorField) else PolyVectorField(tuple(w))


def divergence(w: PolyVectorField | Sequence[Polynomial]) -> Polynomial:
    w = _as_field(w)
    total = Polynomial.zero(w.dim)
    for j, c in enumerate(w):
        total = total + c.diff(j)
    return total


def gradient_field(p: Polynomial) -> PolyVectorField:
    return PolyVectorField(tuple(p.gradient()))


def boundary_data(e: Ellipsoid, dadt: PolyVectorField | Sequence[Polynomial]) -> Polynomial:
    """Neumann data ``f = -(dA/dt) . grad q`` for the potential ``V``."""
    dadt = _as_field(dadt)
    if dadt.dim != e.dim:
        raise ValueError("field dimension does not match the ellipsoid")
    div = divergence(dadt)
    if not div.is_zero():
        raise GaugeViolationError(div)
    f = -dot(dadt.components, e.grad_q)
    if neumann_compatible(e, f) != 0:
        raise InternalInvariantError("divergence-free field produced incompatible data")
    return f


def electric_field(
    e: Ellipsoid, dadt: PolyVectorField | Sequence[Polynomial], *, parallel: bool = False
) -> Tuple[Polynomial, PolyVectorField]:
    """Return ``(V, E)`` with ``E = -grad V - dA/dt``."""
    dadt = _as_field(dadt)
    f = boundary_data(e, dadt)
    v = solve_neumann(e, f, parallel=parallel).h
    field = PolyVectorField(tuple(-v.diff(j) - dadt[j] for j in range(e.dim)))
    return v, field


def normal_component(e: Ellipsoid, w: PolyVectorField) -> Polynomial:
    """``w . grad q``; a multiple of the outward normal component on the boundary."""
    return dot(w.components, e.grad_q)
