import logging
from typing import Optional, Tuple

import numpy as np

from ..mesh import SimplicialMesh
from .assembly import assemble_load, assemble_mass, assemble_stiffness
from .boundary_condition import BoundaryCondition
from .const import STATE_TOLERANCE
from .linear_solver import cg_solve
from .problem_spec import ProblemSpec
from .scalar_field import ScalarFieldP1
from .sparse_operator import SparseSymmetricOperator

_LOGGER = logging.getLogger(__name__)


def system_operator(mesh: SimplicialMesh, bc: BoundaryCondition) -> Tuple[SparseSymmetricOperator, np.ndarray]:
    """
    Bilinear form of the state equation and the mask of free vertices.
    Dirichlet: stiffness with boundary vertices fixed; Neumann reaction: stiffness + mass, all free.
    """
    A = assemble_stiffness(mesh)
    free = np.ones(mesh.num_vertices, dtype=bool)
    if bc == BoundaryCondition.DIRICHLET_ZERO:
        free[mesh.boundary.boundary_vertices] = False
    else:
        A = A + assemble_mass(mesh)
    return A, free


def solve_system(
    mesh: SimplicialMesh,
    bc: BoundaryCondition,
    b: np.ndarray,
    tol: float = STATE_TOLERANCE,
    x0: Optional[np.ndarray] = None,
    jacobi: bool = False,
) -> ScalarFieldP1:
    """Solve the state operator against a nodal dual vector by symmetric elimination of fixed vertices."""
    A, free = system_operator(mesh, bc)
    u = np.zeros(mesh.num_vertices)
    if free.any():
        start = None if x0 is None else np.asarray(x0)[free]
        u[free] = cg_solve(A.restrict(free), b[free], tol, x0=start, jacobi=jacobi)
    return ScalarFieldP1(mesh, u)


def solve_state(
    mesh: SimplicialMesh,
    problem: ProblemSpec,
    tol: float = STATE_TOLERANCE,
    x0: Optional[np.ndarray] = None,
    jacobi: bool = False,
) -> ScalarFieldP1:
    problem.check_mesh(mesh)
    b = assemble_load(mesh, problem.rhs)
    u = solve_system(mesh, problem.bc, b, tol, x0=x0, jacobi=jacobi)
    _LOGGER.debug(f'State solved on {mesh!r}: {u!r}')
    return u
