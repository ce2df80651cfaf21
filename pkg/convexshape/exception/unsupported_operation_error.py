from .convex_shape_exception import ConvexShapeException

class UnsupportedOperationError(ConvexShapeException):
    """ Exception raised when the operation is not supported """
    pass
