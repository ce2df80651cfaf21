from .convex_shape_exception import ConvexShapeException

class MeshParseError(ConvexShapeException):
    """ Exception raised when mesh text cannot be parsed """
    def __init__(self, line: int, column: int, message: str, *args: object) -> None:
        super().__init__(*args)
        self.line = line
        self.column = column
        self.message = message

    def __str__(self) -> str:
        return f"Mesh parse error at line {self.line}, column {self.column}: {self.message}"
