import math
from typing import NamedTuple, Optional

import numpy as np
from scipy.spatial.distance import directed_hausdorff

from ..convexity import CONVEXITY_TOLERANCE, constraint_values, violation_threshold
from ..mesh import SimplicialMesh


class ShapeDiagnostics(NamedTuple):
    diameter: float
    volume: float
    max_constraint: float
    convex: bool
    asymmetry: float
    five_fold_defect: Optional[float]


def centroid(mesh: SimplicialMesh) -> np.ndarray:
    """Volume-weighted centroid"""
    volumes = mesh.volumes
    centers = mesh.vertices[mesh.cells].mean(axis=1)
    return (volumes[:, None] * centers).sum(axis=0) / volumes.sum()


def asymmetry(mesh: SimplicialMesh) -> float:
    """Relative spread (std / mean) of boundary-vertex distances to the centroid; 0 for a sphere."""
    pts = mesh.vertices[mesh.boundary.boundary_vertices]
    r = np.linalg.norm(pts - centroid(mesh), axis=1)
    return float(r.std() / r.mean()) if r.mean() > 0 else 0.0


def rotational_defect(mesh: SimplicialMesh, n: int = 5) -> float:
    """Hausdorff distance between the 2D boundary vertices and their rotation by 2pi/n about the centroid"""
    c = centroid(mesh)
    pts = mesh.vertices[mesh.boundary.boundary_vertices] - c
    angle = 2 * math.pi / n
    rotation = np.array([[math.cos(angle), -math.sin(angle)], [math.sin(angle), math.cos(angle)]])
    rotated = pts @ rotation.T
    return float(max(directed_hausdorff(pts, rotated)[0], directed_hausdorff(rotated, pts)[0]))


def shape_diagnostics(mesh: SimplicialMesh, convexity_tol: float = CONVEXITY_TOLERANCE) -> ShapeDiagnostics:
    max_constraint = constraint_values(mesh).max_value
    diameter = mesh.diameter
    return ShapeDiagnostics(
        diameter=diameter,
        volume=mesh.total_volume,
        max_constraint=max_constraint,
        convex=bool(max_constraint <= violation_threshold(mesh, convexity_tol)),
        asymmetry=asymmetry(mesh),
        five_fold_defect=rotational_defect(mesh) if mesh.dim == 2 else None,
    )
