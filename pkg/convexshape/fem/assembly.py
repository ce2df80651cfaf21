"""Vectorized P1 assembly"""

import logging
from typing import Callable

import numpy as np

from ..exception import DegenerateCellError
from ..mesh import SimplicialMesh
from .quadrature import guarded_eval, quadrature_points, quadrature_rule
from .sparse_operator import SparseSymmetricOperator

_LOGGER = logging.getLogger(__name__)


def _check_volumes(mesh: SimplicialMesh):
    vols = mesh.signed_volumes
    bad = np.flatnonzero(vols <= 0)
    if bad.size:
        raise DegenerateCellError(int(bad[0]), float(vols[bad[0]]))


def local_stiffness(mesh: SimplicialMesh) -> np.ndarray:
    """Per-cell matrices |T| grad(phi_a) . grad(phi_b), shape (cells, d+1, d+1)"""
    grads = mesh.gradients
    return mesh.volumes[:, None, None] * np.einsum('cad,cbd->cab', grads, grads)


def local_mass(mesh: SimplicialMesh) -> np.ndarray:
    """Per-cell exact P1 mass matrices |T| (1 + delta_ab) / ((d+1)(d+2))"""
    n = mesh.dim + 1
    ref = (np.ones((n, n)) + np.eye(n)) / (n * (n + 1))
    return mesh.volumes[:, None, None] * ref[None, :, :]


def scatter_matrix(mesh: SimplicialMesh, local: np.ndarray) -> SparseSymmetricOperator:
    cells = mesh.cells
    n = cells.shape[1]
    rows = np.repeat(cells, n, axis=1)
    cols = np.tile(cells, (1, n))
    return SparseSymmetricOperator.from_triplets(rows, cols, local.reshape(len(cells), -1), mesh.num_vertices)


def scatter_vector(mesh: SimplicialMesh, local: np.ndarray) -> np.ndarray:
    """Sum per-cell nodal contributions (cells, d+1) into a global vector"""
    return np.bincount(mesh.cells.reshape(-1), weights=local.reshape(-1), minlength=mesh.num_vertices)


def assemble_stiffness(mesh: SimplicialMesh) -> SparseSymmetricOperator:
    _check_volumes(mesh)
    return scatter_matrix(mesh, local_stiffness(mesh))


def assemble_mass(mesh: SimplicialMesh) -> SparseSymmetricOperator:
    _check_volumes(mesh)
    return scatter_matrix(mesh, local_mass(mesh))


def assemble_load(mesh: SimplicialMesh, f: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """b_i = sum over cells of the degree-2 quadrature of f * phi_i"""
    _check_volumes(mesh)
    bary, weights = quadrature_rule(mesh.dim)
    points = quadrature_points(mesh)
    values = guarded_eval(f, points.shape[:2], points)
    local = mesh.volumes[:, None] * ((values * weights) @ bary)
    return scatter_vector(mesh, local)
