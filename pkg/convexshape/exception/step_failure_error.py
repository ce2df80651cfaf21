from .convex_shape_exception import ConvexShapeException

class StepFailureError(ConvexShapeException):
    """ Exception raised when backtracking finds no acceptable step """
    def __init__(self, k: int, diagnostic: str) -> None:
        super().__init__()
        self.k = k
        self.diagnostic = diagnostic

    def __str__(self) -> str:
        return f"No acceptable step after {self.k} backtracking steps: {self.diagnostic}"
