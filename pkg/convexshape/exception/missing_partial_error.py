from .convex_shape_exception import ConvexShapeException

class MissingPartialError(ConvexShapeException):
    """ Exception raised when an integrand does not provide a required partial derivative """
    def __init__(self, name: str) -> None:
        super().__init__()
        self.name = name

    def __str__(self) -> str:
        return f"Integrand has no partial derivative '{self.name}'"
