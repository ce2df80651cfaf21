from .convex_shape_exception import ConvexShapeException

class IntegrandEvaluationError(ConvexShapeException):
    """ Exception raised when an integrand or source term cannot be evaluated """
    def __init__(self, cell: int, message: str, *args: object) -> None:
        super().__init__(*args)
        self.cell = cell
        self.message = message

    def __str__(self) -> str:
        return f"Evaluation failed on cell {self.cell}: {self.message}"
