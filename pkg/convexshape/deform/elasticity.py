import logging

import numpy as np

from ..fem import SparseSymmetricOperator, local_mass
from ..mesh import SimplicialMesh
from .elasticity_params import ElasticityParams

_LOGGER = logging.getLogger(__name__)


def vector_dofs(mesh: SimplicialMesh) -> np.ndarray:
    """Per-cell dof ids (cells, d+1, d) in vertex-major numbering d*v + alpha"""
    return mesh.dim * mesh.cells[:, :, None] + np.arange(mesh.dim)[None, None, :]


def assemble_elasticity(mesh: SimplicialMesh, params: ElasticityParams) -> SparseSymmetricOperator:
    """
    E(V, W) = int 2 mu eps(V):eps(W) + lambda div V div W + delta V.W

    Strain terms are cell constants; the delta term uses the exact P1 mass matrix per component.
    """
    d = mesh.dim
    G = mesh.gradients
    vol = mesh.volumes[:, None, None, None, None]
    eye = np.eye(d)

    gg = np.einsum('cak,cbk->cab', G, G)
    local = params.mu * (
        np.einsum('cab,ij->caibj', gg, eye)
        + np.einsum('caj,cbi->caibj', G, G)
    )
    local = local + params.lam * np.einsum('cai,cbj->caibj', G, G)
    local = vol * local + params.delta * np.einsum('cab,ij->caibj', local_mass(mesh), eye)

    dofs = vector_dofs(mesh).reshape(mesh.num_cells, -1)
    k = dofs.shape[1]
    rows = np.repeat(dofs, k, axis=1)
    cols = np.tile(dofs, (1, k))
    E = SparseSymmetricOperator.from_triplets(rows, cols, local.reshape(mesh.num_cells, -1), d * mesh.num_vertices)
    _LOGGER.debug(f'Assembled elasticity operator {E!r}')
    return E
