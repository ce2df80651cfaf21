from .convex_shape_exception import ConvexShapeException

class NonConformingMeshError(ConvexShapeException):
    """Error raised when the cell connectivity does not form a conforming simplicial mesh"""
    pass
