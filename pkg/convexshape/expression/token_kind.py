import enum


@enum.unique
class TokenKind(enum.Enum):
    NUMBER = "number"
    IDENTIFIER = "identifier"
    PLUS = "+"
    MINUS = "-"
    TIMES = "*"
    DIVIDE = "/"
    CARET = "^"
    LPAREN = "("
    RPAREN = ")"
    END = "end of input"
