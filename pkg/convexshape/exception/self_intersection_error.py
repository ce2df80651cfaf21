from .boundary_topology_error import BoundaryTopologyError

class SelfIntersectionError(BoundaryTopologyError):
    """Error raised when the boundary polygon intersects itself"""
    pass
