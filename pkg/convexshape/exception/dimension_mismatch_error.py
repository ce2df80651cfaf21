from .convex_shape_exception import ConvexShapeException

class DimensionMismatchError(ConvexShapeException):
    """Error raised when array sizes or spatial dimensions are inconsistent"""
    pass
