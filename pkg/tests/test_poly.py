from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neumann_ellipsoid import Ellipsoid, Polynomial, ZERO_DEGREE, parse_polynomial, variables
from neumann_ellipsoid.poly import (
    dot,
    homogeneous_components,
    laplacian,
    monomials_of_degree,
    parity,
    partial_derivative,
    total_degree,
)
from golden_data import ANTILAPLACIAN_DENOMINATOR, ANTILAPLACIAN_NUMERATORS
from strategies import polynomial_pairs, polynomials


def test_canonical_form_drops_zero_terms():
    x1, x2 = variables(2)
    p = (x1 + x2) + (-x1)
    assert p == x2
    assert list(p.terms) == [(0, 1)]
    assert Polynomial(2, {(1, 0): 0}).is_zero()


def test_monomial_product():
    x1, x2 = variables(2)
    assert x1**2 * x2**3 == Polynomial.monomial((2, 3))


def test_ring_identity_with_q():
    q = Ellipsoid((3, 1, 2)).q
    assert (q - 1) * 1 + 1 == q


def test_dimension_mismatch_raises():
    with pytest.raises(ValueError):
        variables(2)[0] + variables(3)[0]
    with pytest.raises(ValueError):
        Polynomial(2, {(1, 0, 0): 1})


def test_degree_sentinel():
    assert Polynomial.zero(3).degree == ZERO_DEGREE
    assert max(Polynomial.zero(3).degree, 2 + Polynomial.zero(3).degree) == ZERO_DEGREE
    assert Polynomial.constant(3, 5).degree == 0


def test_partial_derivative_examples():
    x1, x2, x3 = variables(3)
    assert partial_derivative(x1**3 * x2, 0) == 3 * x1**2 * x2
    assert partial_derivative(x1**3, 1).is_zero()
    assert partial_derivative(Ellipsoid((3, 1, 2)).q, 2) == 4 * x3
    with pytest.raises(ValueError):
        partial_derivative(x1, 3)


def test_laplacian_examples():
    x1, x2, x3 = variables(3)
    assert laplacian(x1**2 + x2**2) == 4
    assert laplacian(x1**2 - x2**2).is_zero()
    u = Polynomial(3, {a: Fraction(c, ANTILAPLACIAN_DENOMINATOR)
                       for a, c in ANTILAPLACIAN_NUMERATORS.items()})
    assert laplacian(u) == x1**9 * x2**3 * x3**2


def test_homogeneous_components_examples():
    x1, x2 = variables(2)
    comps = homogeneous_components(x1**2 * x2 + x1 - 5)
    assert comps == [(0, Polynomial.constant(2, -5)), (1, x1), (3, x1**2 * x2)]
    assert homogeneous_components(Polynomial.zero(2)) == []
    q = Ellipsoid((3, 1, 2)).q
    assert homogeneous_components(q - 1) == [(0, Polynomial.constant(3, -1)), (2, q)]


def test_evaluate():
    x1, x2 = variables(2)
    assert (x1**2 + 2).evaluate((3, 0)) == 11
    assert Ellipsoid((3, 1, 2)).q.evaluate((1, 0, 0)) == 3
    with pytest.raises(ValueError):
        x1.evaluate((1,))


def test_multi_index_helpers():
    assert total_degree((2, 0, 3)) == 5
    assert parity((2, 1, 3)) == (0, 1, 1)
    mons = monomials_of_degree(3, 2)
    assert len(mons) == 6
    assert mons[0] == (2, 0, 0) and mons[-1] == (0, 0, 2)


def test_canonical_text_order():
    p = parse_polynomial("x3 + x1^2 - 1/2 + x1*x2 + 4*x2^2", 3)
    assert p.to_text() == "x1^2 + x1*x2 + 4*x2^2 + x3 - 1/2"
    c = Fraction(-2454945, 2701782720)
    assert Polynomial.monomial((6, 0, 0), c).to_text() == "-2683/2952768*x1^6"
    assert (-Polynomial.monomial((6, 0, 0), c)).to_text() == "2683/2952768*x1^6"
    assert parse_polynomial("-x1*x2 + 1", 2).to_text() == "-x1*x2 + 1"
    assert Polynomial.zero(2).to_text() == "0"


@given(polynomial_pairs(), st.data())
@settings(max_examples=60, deadline=None)
def test_ring_axioms(pair, data):
    p, r = pair
    s = data.draw(polynomials(dim=p.dim, max_degree=3, max_terms=4))
    assert p + r == r + p
    assert p * r == r * p
    assert (p + r) + s == p + (r + s)
    assert (p * r) * s == p * (r * s)
    assert p * (r + s) == p * r + p * s
    assert p - p == 0
    if not p.is_zero() and not r.is_zero():
        assert (p * r).degree == p.degree + r.degree
    assert (p + r).degree <= max(p.degree, r.degree)


@given(polynomial_pairs())
@settings(max_examples=60, deadline=None)
def test_laplacian_product_rule(pair):
    p, r = pair
    cross = dot(p.gradient(), r.gradient())
    assert (p * r).laplacian() == p * r.laplacian() + r * p.laplacian() + 2 * cross


@given(polynomials(max_degree=6))
@settings(max_examples=60, deadline=None)
def test_homogeneous_components_sum_to_identity(p):
    comps = p.homogeneous_components()
    total = Polynomial.zero(p.dim)
    for k, part in comps:
        assert part.is_homogeneous() and part.degree == k and not part.is_zero()
        total = total + part
    assert total == p
    assert [k for k, _ in comps] == sorted({k for k, _ in comps})


@given(polynomials(max_degree=6))
@settings(max_examples=60, deadline=None)
def test_partials_commute(p):
    for i in range(p.dim):
        for j in range(p.dim):
            assert p.diff(i).diff(j) == p.diff(j).diff(i)


@given(polynomials(max_degree=6))
@settings(max_examples=60, deadline=None)
def test_laplacian_drops_degree_by_two(p):
    lap = p.laplacian()
    if p.degree < 2:
        assert lap.is_zero()
        return
    assert lap.degree <= p.degree - 2
    if not p.homogeneous_part(int(p.degree)).laplacian().is_zero():
        assert lap.degree == p.degree - 2


def test_laplacian_degree_can_drop_further_when_top_part_is_harmonic():
    x1, x2 = variables(2)
    p = x1**3 * x2 - x1 * x2**3 + x1**2
    assert p.laplacian() == 2


@given(polynomials(max_degree=6))
@settings(max_examples=80, deadline=None)
def test_text_round_trip(p):
    text = p.to_text()
    again = parse_polynomial(text, p.dim)
    assert again == p
    assert again.to_text() == text
