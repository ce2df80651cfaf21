"""Interior quadrature shared by load assembly, objective and shape derivative"""

from typing import Callable, Tuple

import numpy as np

from ..exception import IntegrandEvaluationError
from ..mesh import SimplicialMesh
from .const import QUADRATURE_RULES


def quadrature_rule(dim: int) -> Tuple[np.ndarray, np.ndarray]:
    """(barycentric points (q, d+1), weights (q,)); weights sum to 1 and scale with the cell volume."""
    points, weights = QUADRATURE_RULES[dim]
    return np.array(points), np.array(weights)


def quadrature_points(mesh: SimplicialMesh) -> np.ndarray:
    """Physical quadrature points, shape (cells, q, d)."""
    bary, _ = quadrature_rule(mesh.dim)
    return np.einsum('qa,cad->cqd', bary, mesh.vertices[mesh.cells])


def guarded_eval(func: Callable, shape: Tuple[int, int], *args: np.ndarray) -> np.ndarray:
    """
    Evaluate a vectorized function on flattened per-cell point data and reshape
    the result to `shape` (cells, q, ...).  Exceptions and non-finite values are
    reported with the id of the first offending cell.
    """
    num_cells, num_points = shape
    flat = [a.reshape((num_cells * num_points,) + a.shape[2:]) for a in args]
    try:
        value = np.asarray(func(*flat), dtype=float)
    except Exception as exc:
        raise IntegrandEvaluationError(_first_failing_cell(func, args), str(exc)) from exc

    n = num_cells * num_points
    if value.ndim == 0:
        value = np.full(n, float(value))
    elif value.shape[0] != n:
        value = np.broadcast_to(value, (n,) + value.shape)
    value = value.reshape((num_cells, num_points) + value.shape[1:])
    bad = ~np.isfinite(value)
    if bad.any():
        cell = int(np.argwhere(bad)[0][0])
        raise IntegrandEvaluationError(cell, 'non-finite value')
    return value


def _first_failing_cell(func: Callable, args) -> int:
    for cell in range(args[0].shape[0]):
        try:
            func(*(a[cell] for a in args))
        except Exception:
            return cell
    return -1


def integrate(mesh: SimplicialMesh, values: np.ndarray) -> float:
    """Sum over cells of |T| times the weighted quadrature values (cells, q)."""
    _, weights = quadrature_rule(mesh.dim)
    return float(mesh.volumes @ (values @ weights))
