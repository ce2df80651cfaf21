from .convex_shape_exception import ConvexShapeException

class ExportError(ConvexShapeException):
    """Error raised when an artifact cannot be written"""
    pass
