from .convex_shape_exception import ConvexShapeException

class ExpressionSyntaxError(ConvexShapeException):
    """ Exception raised when an expression cannot be parsed """
    def __init__(self, position: int, message: str, text: str = "") -> None:
        super().__init__()
        self.position = position
        self.message = message
        self.text = text

    def __str__(self) -> str:
        return f"{self.message} at position {self.position} in '{self.text}'"
