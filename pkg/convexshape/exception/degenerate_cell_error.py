from .convex_shape_exception import ConvexShapeException

class DegenerateCellError(ConvexShapeException):
    """ Exception raised when a cell has zero (or inverted) volume """
    def __init__(self, cell: int, volume: float = 0.0, message: str = "cell is degenerate") -> None:
        super().__init__()
        self.cell = cell
        self.volume = volume
        self.message = message

    def __str__(self) -> str:
        return f"Cell {self.cell} -> {self.message} (volume={self.volume:.3e})"
