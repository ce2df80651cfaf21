from .convex_shape_exception import ConvexShapeException

class MeshMismatchError(ConvexShapeException):
    """Error raised when two operands do not live on the same mesh"""
    pass
