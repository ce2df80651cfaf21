import numpy as np
import scipy.sparse as sp

from ..exception import DimensionMismatchError
from ..mesh import SimplicialMesh, VectorFieldP1


class BoundaryScalarField:
    """One value per boundary vertex, numbered like BoundaryTopology.boundary_vertices"""

    def __init__(self, mesh: SimplicialMesh, values):
        values = np.array(values, dtype=float).reshape(-1)
        expected = mesh.boundary.num_boundary_vertices
        if values.size != expected:
            raise DimensionMismatchError(f'boundary field needs {expected} values, got {values.size}')
        self.mesh = mesh
        self.values = values

    def to_vertex_values(self) -> np.ndarray:
        """Extension by zero to all mesh vertices"""
        out = np.zeros(self.mesh.num_vertices)
        out[self.mesh.boundary.boundary_vertices] = self.values
        return out

    def __repr__(self) -> str:
        return f'BoundaryScalarField({self.mesh!r}, max={np.abs(self.values).max(initial=0.0):.3e})'


def assemble_normal_trace(mesh: SimplicialMesh) -> sp.csr_matrix:
    """
    N with V^T N F = int_boundary F (V . n) ds, shape (d * vertices, boundary vertices).
    Facet integrals of products of P1 traces are exact: |F| (1 + delta_ab) / (d (d + 1)).
    """
    d = mesh.dim
    boundary = mesh.boundary
    facets = boundary.facets
    ref = (np.ones((d, d)) + np.eye(d)) / (d * (d + 1))
    local = boundary.facet_measures[:, None, None, None] * np.einsum(
        'ab,fi->faib', ref, boundary.facet_normals)

    rows = np.broadcast_to((d * facets[:, :, None] + np.arange(d))[:, :, :, None], local.shape)
    cols = np.broadcast_to(boundary.positions(facets).reshape(facets.shape)[:, None, None, :], local.shape)
    return sp.coo_matrix(
        (local.reshape(-1), (rows.reshape(-1), cols.reshape(-1))),
        shape=(d * mesh.num_vertices, boundary.num_boundary_vertices),
    ).tocsr()


def normal_pairing(N: sp.csr_matrix, F: BoundaryScalarField, V: VectorFieldP1) -> float:
    """<N F, V>"""
    return float(V.flat @ (N @ F.values))
