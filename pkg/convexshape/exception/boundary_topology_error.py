from .convex_shape_exception import ConvexShapeException

class BoundaryTopologyError(ConvexShapeException):
    """Error raised when the boundary is not a single closed loop (2D)"""
    pass
