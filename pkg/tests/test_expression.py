"""Test the expression parser and its symbolic derivatives."""
import numpy as np
import pytest
from numpy.testing import assert_allclose

from convexshape.exception import ExpressionSyntaxError, InvalidParameterError, UnknownIdentifierError
from convexshape.expression import TokenKind, parse_expression, tokenize


@pytest.mark.parametrize('text, expected', [
    ('1 + 2*3', 7.0),
    ('(1 + 2)*3', 9.0),
    ('8/2/2', 2.0),
    ('2^3^2', 512.0),
    ('-2^2', -4.0),
    ('2^-1', 0.5),
    ('--3', 3.0),
    ('1.5e2 - .5', 149.5),
    ('2E-1', 0.2),
    ('sqrt(16) + exp(0) + cos(0) + sin(0)', 6.0),
])
def test_constant_expressions(text, expected):
    expr = parse_expression(text)
    assert expr.is_constant()
    assert float(expr.evaluate()) == pytest.approx(expected)


def test_vectorized_evaluation():
    expr = parse_expression('x1^2 + 3*u - g2')
    x1 = np.array([0.0, 1.0, 2.0])
    value = expr.evaluate(x1=x1, u=1.0, g2=np.array([1.0, 1.0, 0.0]))
    assert_allclose(value, [2.0, 3.0, 7.0])
    assert expr.free_variables == ('x1', 'u', 'g2')


def test_symbolic_derivative():
    expr = parse_expression('sin(x1)*u^2')
    x1 = np.linspace(-1, 1, 5)
    u = np.linspace(0, 2, 5)
    assert_allclose(expr.derivative('x1').evaluate(x1=x1, u=u), np.cos(x1) * u ** 2)
    assert_allclose(expr.derivative('u').evaluate(x1=x1, u=u), 2 * np.sin(x1) * u)
    assert expr.derivative('g1').is_constant()


def test_tokens_carry_positions():
    tokens = tokenize('x1 ^ 2.5')
    assert [t.kind for t in tokens] == [TokenKind.IDENTIFIER, TokenKind.CARET, TokenKind.NUMBER, TokenKind.END]
    assert [t.position for t in tokens] == [0, 3, 5, 8]


@pytest.mark.parametrize('text, position', [
    ('1 +', 3),
    ('2 $ 3', 2),
    ('(1 + 2', 6),
    ('sin 1', 4),
    ('1 2', 2),
    ('', 0),
])
def test_syntax_errors(text, position):
    with pytest.raises(ExpressionSyntaxError) as info:
        parse_expression(text)
    assert info.value.position == position


def test_unknown_identifier():
    with pytest.raises(UnknownIdentifierError) as info:
        parse_expression('2*y + 1')
    assert info.value.name == 'y'
    assert info.value.position == 2


def test_evaluation_needs_every_variable():
    expr = parse_expression('x1 + x2')
    with pytest.raises(InvalidParameterError):
        expr.evaluate(x1=1.0)
    with pytest.raises(UnknownIdentifierError):
        expr.evaluate(x1=1.0, x2=2.0, y=3.0)
