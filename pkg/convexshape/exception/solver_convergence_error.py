from .convex_shape_exception import ConvexShapeException

class SolverConvergenceError(ConvexShapeException):
    """ Exception raised when the linear solver does not reach its tolerance """
    def __init__(self, iterations: int, residual: float, *args: object) -> None:
        super().__init__(*args)
        self.iterations = iterations
        self.residual = residual

    def __str__(self) -> str:
        return f"CG did not converge: Iterations={self.iterations}, Residual={self.residual:.3e}"
