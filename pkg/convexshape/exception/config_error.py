from .convex_shape_exception import ConvexShapeException

class ConfigError(ConvexShapeException):
    """ Exception raised when a run configuration is invalid """
    def __init__(self, path: str, message: str) -> None:
        super().__init__()
        self.path = path
        self.message = message

    def __str__(self) -> str:
        return f"{self.path} -> {self.message}"
