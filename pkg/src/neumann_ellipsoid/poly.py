"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``n`` variables is a mapping from exponent tuples
(multi-indices) to nonzero ``Fraction`` coefficients::

    3*x1^2*x2 - 1/2   ->   {(2, 1): Fraction(3), (0, 0): Fraction(-1, 2)}

Values are immutable.  Terms are always iterated in graded lexicographic
order (highest total degree first, ties broken lexicographically with
``x1`` greatest), so equal polynomials print identically.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, List, Mapping, Sequence, Tuple, Union

MultiIndex = Tuple[int, ...]
Scalar = Union[int, Fraction]

#: Degree of the zero polynomial.  ``-inf`` keeps ``max`` and ``2 + deg``
#: meaningful without ever producing a bogus nonnegative integer.
ZERO_DEGREE = -math.inf


def total_degree(alpha: MultiIndex) -> int:
    """Return ``|alpha|``."""
    return sum(alpha)


def parity(alpha: MultiIndex) -> Tuple[int, ...]:
    """Return the componentwise parity signature ``alpha mod 2``."""
    return tuple(a & 1 for a in alpha)


def unit_index(n: int, axis: int) -> MultiIndex:
    """The multi-index with a single 1 in position ``axis`` (0-based)."""
    if not 0 <= axis < n:
        raise ValueError(f"axis {axis} out of range for dimension {n}")
    return tuple(1 if i == axis else 0 for i in range(n))


def grlex_key(alpha: MultiIndex) -> Tuple[int, MultiIndex]:
    """Sort key; larger keys come first in canonical order."""
    return (sum(alpha), alpha)


def monomials_of_degree(n: int, k: int) -> List[MultiIndex]:
    """All multi-indices of length ``n`` and total degree ``k``, grlex-descending."""
    if k < 0:
        return []
    if n == 1:
        return [(k,)]
    out = []
    for first in range(k, -1, -1):
        for rest in monomials_of_degree(n - 1, k - first):
            out.append((first,) + rest)
    return out


def format_rational(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return f"{c.numerator}/{c.denominator}"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class Polynomial:
    """Immutable sparse polynomial over the rationals."""

    __slots__ = ("_dim", "_terms", "_hash")

    def __init__(self, dim: int, terms: Mapping[MultiIndex, Scalar] | Iterable = ()):
        if dim < 1:
            raise ValueError("dimension must be positive")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: Dict[MultiIndex, Fraction] = {}
        for alpha, coeff in items:
            alpha = tuple(int(a) for a in alpha)
            if len(alpha) != dim:
                raise ValueError(f"exponent {alpha} does not have length {dim}")
            if any(a < 0 for a in alpha):
                raise ValueError(f"negative exponent in {alpha}")
            c = clean.get(alpha, Fraction(0)) + _as_fraction(coeff)
            clean[alpha] = c
        self._dim = dim
        self._terms = {a: c for a, c in clean.items() if c != 0}
        self._hash = None

    @classmethod
    def _raw(cls, dim: int, terms: Dict[MultiIndex, Fraction]) -> "Polynomial":
        # Trusted constructor: terms already validated, may contain zeros.
        p = object.__new__(cls)
        p._dim = dim
        p._terms = {a: c for a, c in terms.items() if c != 0}
        p._hash = None
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, dim: int) -> "Polynomial":
        return cls._raw(dim, {})

    @classmethod
    def constant(cls, dim: int, value: Scalar) -> "Polynomial":
        return cls._raw(dim, {(0,) * dim: _as_fraction(value)})

    @classmethod
    def variable(cls, dim: int, axis: int) -> "Polynomial":
        """The coordinate polynomial ``x_{axis+1}`` (``axis`` is 0-based)."""
        return cls._raw(dim, {unit_index(dim, axis): Fraction(1)})

    @classmethod
    def monomial(cls, alpha: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(len(alpha), {tuple(alpha): coeff})

    # -- inspection -------------------------------------------------------

    @property
    def dim(self) -> int:
        return self._dim

    @property
    def terms(self) -> Mapping[MultiIndex, Fraction]:
        return MappingProxyType(self._terms)

    @property
    def degree(self) -> Union[int, float]:
        """Total degree; :data:`ZERO_DEGREE` for the zero polynomial."""
        if not self._terms:
            return ZERO_DEGREE
        return max(sum(a) for a in self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self) -> bool:
        return len({sum(a) for a in self._terms}) <= 1

    def coefficient(self, alpha: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(alpha), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self._dim, Fraction(0))

    def sorted_terms(self) -> List[Tuple[MultiIndex, Fraction]]:
        """Terms in canonical (grlex-descending) order."""
        return sorted(self._terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def __iter__(self) -> Iterator[Tuple[MultiIndex, Fraction]]:
        return iter(self.sorted_terms())

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._dim != self._dim:
                raise ValueError(f"dimension mismatch: {self._dim} vs {other._dim}")
            return other
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return Polynomial.constant(self._dim, other)
        return NotImplemented

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) + c
        return Polynomial._raw(self._dim, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self._dim, {a: -c for a, c in self._terms.items()})

    def __pos__(self) -> "Polynomial":
        return self

    def __sub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._terms)
        for a, c in other._terms.items():
            out[a] = out.get(a, 0) - c
        return Polynomial._raw(self._dim, out)

    def __rsub__(self, other) -> "Polynomial":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def scale(self, factor: Scalar) -> "Polynomial":
        factor = _as_fraction(factor)
        if factor == 0:
            return Polynomial.zero(self._dim)
        return Polynomial._raw(self._dim, {a: c * factor for a, c in self._terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Rational)) and not isinstance(other, (bool, Polynomial)):
            return self.scale(other)
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: Dict[MultiIndex, Fraction] = {}
        for a, c in self._terms.items():
            for b, d in other._terms.items():
                e = tuple(x + y for x, y in zip(a, b))
                out[e] = out.get(e, 0) + c * d
        return Polynomial._raw(self._dim, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial.constant(self._dim, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._dim == other._dim and self._terms == other._terms
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            return self._terms == Polynomial.constant(self._dim, other)._terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._dim, frozenset(self._terms.items())))
        return self._hash

    # -- calculus ---------------------------------------------------------

    def diff(self, axis: int) -> "Polynomial":
        """Partial derivative with respect to ``x_{axis+1}`` (0-based axis)."""
        if not 0 <= axis < self._dim:
            raise ValueError(f"axis {axis} out of range for dimension {self._dim}")
        out: Dict[MultiIndex, Fraction] = {}
        for a, c in self._terms.items():
            k = a[axis]
            if k:
                b = a[:axis] + (k - 1,) + a[axis + 1:]
                out[b] = out.get(b, 0) + k * c
        return Polynomial._raw(self._dim, out)

    def gradient(self) -> List["Polynomial"]:
        return [self.diff(j) for j in range(self._dim)]

    def laplacian(self) -> "Polynomial":
        out: Dict[MultiIndex, Fraction] = {}
        for a, c in self._terms.items():
            for j, k in enumerate(a):
                if k >= 2:
                    b = a[:j] + (k - 2,) + a[j + 1:]
                    out[b] = out.get(b, 0) + k * (k - 1) * c
        return Polynomial._raw(self._dim, out)

    def homogeneous_components(self) -> List[Tuple[int, "Polynomial"]]:
        """``[(k, p_k), ...]`` with ``p = sum p_k``, degrees strictly increasing."""
        parts: Dict[int, Dict[MultiIndex, Fraction]] = {}
        for a, c in self._terms.items():
            parts.setdefault(sum(a), {})[a] = c
        return [(k, Polynomial._raw(self._dim, parts[k])) for k in sorted(parts)]

    def homogeneous_part(self, k: int) -> "Polynomial":
        return Polynomial._raw(self._dim, {a: c for a, c in self._terms.items() if sum(a) == k})

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self._dim:
            raise ValueError(f"point has length {len(point)}, expected {self._dim}")
        pt = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for a, c in self._terms.items():
            term = c
            for v, k in zip(pt, a):
                if k:
                    term *= v ** k
            total += term
        return total

    __call__ = evaluate

    def evaluate_float(self, point: Sequence[float]) -> float:
        """Floating-point evaluation, for display and sampling only."""
        total = 0.0
        for a, c in self._terms.items():
            term = float(c)
            for v, k in zip(point, a):
                if k:
                    term *= v ** k
            total += term
        return total

    # -- text -------------------------------------------------------------

    def to_text(self, names: Sequence[str] | None = None) -> str:
        """Canonical plain text, e.g. ``-2454945/2701782720*x1^6 + x2``."""
        if names is None:
            names = [f"x{i + 1}" for i in range(self._dim)]
        if not self._terms:
            return "0"
        pieces = []
        for i, (alpha, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                names[j] if k == 1 else f"{names[j]}^{k}" for j, k in enumerate(alpha) if k
            )
            mag = abs(c)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            if i == 0:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f" - {body}" if c < 0 else f" + {body}")
        return "".join(pieces)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self._dim}, {self.to_text()!r})"


def variables(dim: int) -> List[Polynomial]:
    """``[x1, ..., xn]`` as polynomials."""
    return [Polynomial.variable(dim, j) for j in range(dim)]


def partial_derivative(p: Polynomial, axis: int) -> Polynomial:
    return p.diff(axis)


def laplacian(p: Polynomial) -> Polynomial:
    return p.laplacian()


def homogeneous_components(p: Polynomial) -> List[Tuple[int, Polynomial]]:
    return p.homogeneous_components()


def evaluate(p: Polynomial, point: Sequence[Scalar]) -> Fraction:
    return p.evaluate(point)


def dot(u: Sequence[Polynomial], v: Sequence[Polynomial]) -> Polynomial:
    """Sum of componentwise products of two polynomial vectors."""
    if len(u) != len(v):
        raise ValueError("vector length mismatch")
    if not u:
        raise ValueError("empty vectors")
    total = Polynomial.zero(u[0].dim)
    for a, b in zip(u, v):
        total = total + a * b
    return total
