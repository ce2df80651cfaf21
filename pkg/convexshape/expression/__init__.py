"""Arithmetic expressions for problem data"""

from .const import *
from .token_kind import TokenKind
from .scanner import Token, tokenize
from .parser import Parser
from .expression import Expression, parse_expression
