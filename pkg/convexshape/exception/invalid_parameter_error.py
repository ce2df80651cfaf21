from .convex_shape_exception import ConvexShapeException

class InvalidParameterError(ConvexShapeException):
    """Error raised when a numerical parameter is outside its admissible range"""
    pass
