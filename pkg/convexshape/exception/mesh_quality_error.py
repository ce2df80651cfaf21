from .convex_shape_exception import ConvexShapeException

class MeshQualityError(ConvexShapeException):
    """ Exception raised when a deformation violates the mesh-quality bounds """
    def __init__(self, report, step: float) -> None:
        super().__init__()
        self.report = report
        self.step = step

    def __str__(self) -> str:
        r = self.report
        return (f"Deformation with t={self.step:g} rejected: det in [{r.min_det:.4f}, {r.max_det:.4f}], "
                f"norm {r.max_norm:.4f}")
