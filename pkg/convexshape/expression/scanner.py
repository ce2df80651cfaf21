import re
from typing import List, NamedTuple

from ..exception import ExpressionSyntaxError
from .token_kind import TokenKind


class Token(NamedTuple):
    kind: TokenKind
    text: str
    position: int


_TOKEN_PATTERN = re.compile(r"""
    (?P<space>\s+)
  | (?P<number>(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)
  | (?P<identifier>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<operator>[-+*/^()])
""", re.VERBOSE)

_OPERATORS = {kind.value: kind for kind in (
    TokenKind.PLUS, TokenKind.MINUS, TokenKind.TIMES, TokenKind.DIVIDE,
    TokenKind.CARET, TokenKind.LPAREN, TokenKind.RPAREN,
)}


def tokenize(text: str) -> List[Token]:
    """Split text into tokens; positions are zero-based character offsets."""
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN_PATTERN.match(text, position)
        if match is None:
            raise ExpressionSyntaxError(position, f"Unexpected character '{text[position]}'", text)
        group = match.lastgroup
        value = match.group(group)
        if group == 'number':
            tokens.append(Token(TokenKind.NUMBER, value, position))
        elif group == 'identifier':
            tokens.append(Token(TokenKind.IDENTIFIER, value, position))
        elif group == 'operator':
            tokens.append(Token(_OPERATORS[value], value, position))
        position = match.end()
    tokens.append(Token(TokenKind.END, '', len(text)))
    return tokens
