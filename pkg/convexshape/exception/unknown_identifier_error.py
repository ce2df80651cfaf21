from .expression_syntax_error import ExpressionSyntaxError

class UnknownIdentifierError(ExpressionSyntaxError):
    """ Exception raised when an expression references an identifier that is not known """
    def __init__(self, name: str, position: int, text: str = "") -> None:
        super().__init__(position, f"Unknown identifier '{name}'", text)
        self.name = name
