"""
Convexity constraints C_i(X) <= 0.

2D: one quadratic per boundary vertex x with CCW neighbours p (previous) and n (next),
    C = (p - x)_1 (n - x)_2 - (p - x)_2 (n - x)_1
3D: one cubic per boundary edge (i, j) with opposite vertices l, r of the two
    adjacent boundary triangles, C = -(l - i) . ((j - i) x (r - i))
"""

from typing import NamedTuple, Optional

import numpy as np
import scipy.sparse as sp

from ..mesh import SimplicialMesh
from .const import CONVEXITY_TOLERANCE


class ConstraintSystem(NamedTuple):
    values: np.ndarray
    jacobian: Optional[sp.csr_matrix]
    index_map: np.ndarray
    threshold: float = 0.0

    @property
    def count(self) -> int:
        return self.values.shape[0]

    @property
    def max_value(self) -> float:
        return float(self.values.max()) if self.count else -np.inf

    def violated(self) -> np.ndarray:
        """Rows above the noise threshold; the merit slope only counts these"""
        return self.values > self.threshold


def _stencils_2d(mesh: SimplicialMesh) -> np.ndarray:
    loop = mesh.boundary.loop
    return np.column_stack([np.roll(loop, 1), loop, np.roll(loop, -1)])


def _values_2d(x: np.ndarray, index_map: np.ndarray) -> np.ndarray:
    a = x[index_map[:, 0]] - x[index_map[:, 1]]
    b = x[index_map[:, 2]] - x[index_map[:, 1]]
    return a[:, 0] * b[:, 1] - a[:, 1] * b[:, 0]


def _gradients_2d(x: np.ndarray, index_map: np.ndarray) -> np.ndarray:
    """(N, 3, 2): gradient of each C_i with respect to (p, x, n)"""
    a = x[index_map[:, 0]] - x[index_map[:, 1]]
    b = x[index_map[:, 2]] - x[index_map[:, 1]]
    d_prev = np.column_stack([b[:, 1], -b[:, 0]])
    d_next = np.column_stack([-a[:, 1], a[:, 0]])
    return np.stack([d_prev, -(d_prev + d_next), d_next], axis=1)


def _triple_parts(x: np.ndarray, index_map: np.ndarray):
    i, j, l, r = (x[index_map[:, k]] for k in range(4))
    return l - i, j - i, r - i


def _values_3d(x: np.ndarray, index_map: np.ndarray) -> np.ndarray:
    a, b, c = _triple_parts(x, index_map)
    return -np.einsum('nk,nk->n', a, np.cross(b, c))


def _gradients_3d(x: np.ndarray, index_map: np.ndarray) -> np.ndarray:
    """(N, 4, 3): gradient of each C with respect to (i, j, l, r)"""
    a, b, c = _triple_parts(x, index_map)
    d_l = -np.cross(b, c)
    d_j = -np.cross(c, a)
    d_r = -np.cross(a, b)
    return np.stack([-(d_l + d_j + d_r), d_j, d_l, d_r], axis=1)


def _index_map(mesh: SimplicialMesh) -> np.ndarray:
    return _stencils_2d(mesh) if mesh.dim == 2 else mesh.boundary.outer_edges


def violation_threshold(mesh: SimplicialMesh, tol: float = CONVEXITY_TOLERANCE) -> float:
    """tol diam^d: the constraints scale like a length squared in 2D and cubed in 3D"""
    return tol * mesh.diameter ** mesh.dim


def constraint_values(mesh: SimplicialMesh, tol: float = CONVEXITY_TOLERANCE) -> ConstraintSystem:
    index_map = _index_map(mesh)
    values = (_values_2d if mesh.dim == 2 else _values_3d)(mesh.vertices, index_map)
    return ConstraintSystem(values, None, index_map, violation_threshold(mesh, tol))


def constraint_jacobian(mesh: SimplicialMesh, tol: float = CONVEXITY_TOLERANCE) -> ConstraintSystem:
    """Values plus the exact sparse Jacobian over vertex-major dofs d*v + alpha"""
    d = mesh.dim
    index_map = _index_map(mesh)
    if d == 2:
        values = _values_2d(mesh.vertices, index_map)
        grads = _gradients_2d(mesh.vertices, index_map)
    else:
        values = _values_3d(mesh.vertices, index_map)
        grads = _gradients_3d(mesh.vertices, index_map)

    n, k = index_map.shape
    rows = np.repeat(np.arange(n), k * d)
    cols = (d * index_map[:, :, None] + np.arange(d)[None, None, :]).reshape(-1)
    jacobian = sp.coo_matrix((grads.reshape(-1), (rows, cols)), shape=(n, d * mesh.num_vertices)).tocsr()
    return ConstraintSystem(values, jacobian, index_map, violation_threshold(mesh, tol))


def is_convex(mesh: SimplicialMesh, tol: float = 0.0) -> bool:
    return constraint_values(mesh).max_value <= tol
