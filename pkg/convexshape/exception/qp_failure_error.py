from .convex_shape_exception import ConvexShapeException

class QpFailureError(ConvexShapeException):
    """ Exception raised when the direction QP could not be solved """
    def __init__(self, status, message: str = "") -> None:
        super().__init__()
        self.status = status
        self.message = message

    def __str__(self) -> str:
        return f"QP failed with status {self.status}: {self.message}"
