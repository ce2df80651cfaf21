from .convex_shape_exception import ConvexShapeException

class DescentFailureError(ConvexShapeException):
    """ Exception raised when increasing the merit penalty does not produce a descent direction """
    def __init__(self, penalty: float, slope: float) -> None:
        super().__init__()
        self.penalty = penalty
        self.slope = slope

    def __str__(self) -> str:
        return f"Merit slope still {self.slope:.3e} >= 0 at M={self.penalty:.3e}"
