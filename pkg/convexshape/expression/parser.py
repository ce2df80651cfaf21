"""
Recursive-descent parser producing sympy expressions.

    expression := term { ('+' | '-') term }
    term       := unary { ('*' | '/') unary }
    unary      := '-' unary | power
    power      := atom [ '^' unary ]          (right associative)
    atom       := NUMBER | VARIABLE | FUNCTION '(' expression ')' | '(' expression ')'
"""

import sympy

from ..exception import ExpressionSyntaxError, UnknownIdentifierError
from .const import VARIABLES
from .scanner import Token, tokenize
from .token_kind import TokenKind

SYMBOLS = {name: sympy.Symbol(name, real=True) for name in VARIABLES}

_FUNCTIONS = {
    'exp': sympy.exp,
    'sin': sympy.sin,
    'cos': sympy.cos,
    'sqrt': sympy.sqrt,
}


class Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.index = 0

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def peek(self, kind: TokenKind) -> bool:
        return self.token.kind == kind

    def accept(self, kind: TokenKind) -> bool:
        if self.peek(kind):
            self.index += 1
            return True
        return False

    def expect(self, kind: TokenKind):
        if not self.accept(kind):
            self.error(f"Expected '{kind.value}'")

    def error(self, message: str):
        found = self.token.text or self.token.kind.value
        raise ExpressionSyntaxError(self.token.position, f"{message}, found '{found}'", self.text)

    def parse(self) -> sympy.Expr:
        if self.peek(TokenKind.END):
            self.error('Empty expression')
        expr = self._expression()
        if not self.peek(TokenKind.END):
            self.error('Unexpected token')
        return expr

    def _expression(self) -> sympy.Expr:
        expr = self._term()
        while True:
            if self.accept(TokenKind.PLUS):
                expr = expr + self._term()
            elif self.accept(TokenKind.MINUS):
                expr = expr - self._term()
            else:
                return expr

    def _term(self) -> sympy.Expr:
        expr = self._unary()
        while True:
            if self.accept(TokenKind.TIMES):
                expr = expr * self._unary()
            elif self.accept(TokenKind.DIVIDE):
                expr = expr / self._unary()
            else:
                return expr

    def _unary(self) -> sympy.Expr:
        if self.accept(TokenKind.MINUS):
            return -self._unary()
        return self._power()

    def _power(self) -> sympy.Expr:
        base = self._atom()
        if self.accept(TokenKind.CARET):
            return base ** self._unary()
        return base

    def _atom(self) -> sympy.Expr:
        token = self.token
        if self.accept(TokenKind.NUMBER):
            if any(c in token.text for c in '.eE'):
                return sympy.Float(token.text)
            return sympy.Integer(token.text)
        if self.accept(TokenKind.IDENTIFIER):
            if token.text in _FUNCTIONS:
                self.expect(TokenKind.LPAREN)
                argument = self._expression()
                self.expect(TokenKind.RPAREN)
                return _FUNCTIONS[token.text](argument)
            if token.text in SYMBOLS:
                return SYMBOLS[token.text]
            raise UnknownIdentifierError(token.text, token.position, self.text)
        if self.accept(TokenKind.LPAREN):
            expr = self._expression()
            self.expect(TokenKind.RPAREN)
            return expr
        self.error('Expected a number, variable, function or parenthesis')
