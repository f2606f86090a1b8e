from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from neumann_ellipsoid import ParseError, Polynomial, parse_polynomial, variables
from neumann_ellipsoid.parser import Neg, Var, parse_expression, tokenize
from strategies import polynomials


def test_examples():
    x1, x2, _ = variables(3)
    assert parse_polynomial("x1^4*x2^2 - 1/315", 3) == x1**4 * x2**2 - Fraction(1, 315)
    y1, y2 = variables(2)
    assert parse_polynomial("x^2 + y^2", 2) == y1**2 + y2**2
    with pytest.raises(ParseError):
        parse_polynomial("x1^(-1)", 2)


def test_whitespace_insensitive():
    assert parse_polynomial("  x1 ^ 2*\tx2 -3 / 6 ", 2) == parse_polynomial("x1^2*x2-1/2", 2)


def test_precedence():
    x1, x2 = variables(2)
    assert parse_polynomial("-x1^2", 2) == -(x1**2)
    assert parse_polynomial("2^3^2", 2) == 2**9
    assert parse_polynomial("x1 - x2 - x1", 2) == -x2
    assert parse_polynomial("2*x1 + 3*x2*x1", 2) == 2 * x1 + 3 * x1 * x2
    assert parse_polynomial("(x1+x2)^2", 2) == x1**2 + 2 * x1 * x2 + x2**2
    assert parse_polynomial("x1^2^0", 2) == x1
    assert parse_polynomial("-2*-x2", 2) == 2 * x2
    assert parse_polynomial("x1^(1+1)", 2) == x1**2
    with pytest.raises(ParseError):
        parse_polynomial("1/2/2", 2)
    with pytest.raises(ParseError):
        parse_polynomial("x1/2", 2)


def test_tree_shape():
    node = parse_expression("-x1^2")
    assert isinstance(node, Neg) and node.operand.op == "^"
    assert isinstance(parse_expression("x7"), Var)
    assert [t.kind for t in tokenize("x1 + 2")] == ["name", "op", "int", "end"]


def test_aliases_only_in_low_dimensions():
    assert parse_polynomial("z", 3) == variables(3)[2]
    with pytest.raises(ParseError):
        parse_polynomial("x", 4)
    with pytest.raises(ParseError):
        parse_polynomial("z", 2)


@pytest.mark.parametrize("src,col", [
    ("2x1", 2),
    ("x1 x2", 4),
    ("x3", 1),
    ("w + 1", 1),
    ("x1^(1/2)", 3),
    ("x1^x2", 3),
    ("(x1 + 1", 8),
    ("", 1),
    ("1/0", 3),
    ("x1 $ 2", 4),
    ("x1 +", 5),
])
def test_errors_carry_position(src, col):
    with pytest.raises(ParseError) as info:
        parse_polynomial(src, 2)
    assert info.value.line == 1
    assert info.value.column == col


def test_error_on_second_line():
    with pytest.raises(ParseError) as info:
        parse_polynomial("x1 +\n  q", 2)
    assert (info.value.line, info.value.column) == (2, 3)


def test_dimension_precondition():
    with pytest.raises(ValueError):
        parse_polynomial("1", 1)


@given(st.integers(2, 4).flatmap(lambda n: polynomials(dim=n, max_degree=7)))
@settings(max_examples=100, deadline=None)
def test_print_parse_round_trip(p):
    text = p.to_text()
    again = parse_polynomial(text, p.dim)
    assert again == p
    assert again.to_text() == text


def test_zero_prints_and_parses():
    assert parse_polynomial(Polynomial.zero(3).to_text(), 3).is_zero()
