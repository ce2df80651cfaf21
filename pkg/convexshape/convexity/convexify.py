import logging

import numpy as np

from ..exception import SelfIntersectionError, UnsupportedOperationError
from ..mesh import SimplicialMesh
from .constraint_system import is_convex
from .convex_hull import convex_hull_2d

_LOGGER = logging.getLogger(__name__)


def _orientation(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    return np.sign((b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1]) - (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0]))


def check_simple_polygon(points: np.ndarray):
    """Raise SelfIntersectionError if two non-adjacent edges of the closed polygon intersect."""
    n = len(points)
    start = points
    end = np.roll(points, -1, axis=0)
    i, j = np.triu_indices(n, k=2)
    keep = ~((i == 0) & (j == n - 1))
    i, j = i[keep], j[keep]
    if i.size == 0:
        return
    p1, p2, q1, q2 = start[i], end[i], start[j], end[j]
    o1 = _orientation(p1, p2, q1)
    o2 = _orientation(p1, p2, q2)
    o3 = _orientation(q1, q2, p1)
    o4 = _orientation(q1, q2, p2)
    crossing = (o1 * o2 < 0) & (o3 * o4 < 0)
    touching = ((o1 == 0) & _on_segment(p1, p2, q1)) | ((o2 == 0) & _on_segment(p1, p2, q2)) \
        | ((o3 == 0) & _on_segment(q1, q2, p1)) | ((o4 == 0) & _on_segment(q1, q2, p2))
    hits = np.flatnonzero(crossing | touching)
    if hits.size:
        raise SelfIntersectionError(f'boundary edges {int(i[hits[0]])} and {int(j[hits[0]])} intersect')


def _on_segment(a: np.ndarray, b: np.ndarray, c: np.ndarray) -> np.ndarray:
    lo = np.minimum(a, b)
    hi = np.maximum(a, b)
    return np.all((c >= lo) & (c <= hi), axis=-1)


def convexify(mesh: SimplicialMesh) -> SimplicialMesh:
    """
    Replace the boundary polygon by its convex hull.

    Boundary vertices that are not hull vertices are placed on the hull edge
    spanning their boundary chain, at the arc-length parameter they had along
    that chain.  Interior vertices are untouched; inverted cells raise
    DegenerateCellError.
    """
    if mesh.dim != 2:
        raise UnsupportedOperationError('convex hull repair is only available in 2D')
    if is_convex(mesh, 0.0):
        return mesh

    loop = mesh.boundary.loop
    points = mesh.vertices[loop]
    check_simple_polygon(points)

    hull = convex_hull_2d(points)
    hull = np.roll(hull, -int(np.argmin(hull)))
    if np.any(np.diff(hull) <= 0):
        raise SelfIntersectionError('convex hull vertices are not in boundary order')

    n = len(loop)
    vertices = np.array(mesh.vertices)
    moved = 0
    for k, first in enumerate(hull):
        last = hull[(k + 1) % len(hull)]
        span = (last - first) % n
        if span <= 1:
            continue
        chain = points[(first + np.arange(span + 1)) % n]
        arc = np.concatenate([[0.0], np.cumsum(np.linalg.norm(np.diff(chain, axis=0), axis=1))])
        s = arc[1:-1] / arc[-1]
        placed = chain[0] + s[:, None] * (chain[-1] - chain[0])
        vertices[loop[(first + 1 + np.arange(span - 1)) % n]] = placed
        moved += span - 1

    _LOGGER.info(f'Convexified boundary: {moved} of {n} boundary vertices moved onto the hull')
    return mesh.with_vertices(vertices)
