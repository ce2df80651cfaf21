"""Direction-finding QP: elasticity-regularized gradient step restricted to normal forces"""

import logging
from typing import Optional

import numpy as np
import scipy.sparse as sp
from scipy.linalg import lstsq
from scipy.sparse.linalg import splu

from ..convexity import ConstraintSystem
from ..exception import DimensionMismatchError, InvalidParameterError, MeshMismatchError
from ..fem import SparseSymmetricOperator
from ..mesh import SimplicialMesh, VectorFieldP1
from ..shapecalc import ShapeGradient
from .normal_trace import BoundaryScalarField
from .qp_strategy import QpStrategy
from .quadratic_program import QuadraticProgram

_LOGGER = logging.getLogger(__name__)


class DirectionProblem:
    """A QuadraticProgram plus the maps from its primal vector back to (V, F)"""

    def __init__(
        self,
        qp: QuadraticProgram,
        mesh: SimplicialMesh,
        strategy: QpStrategy,
        num_v: int,
        force_to_direction: Optional[np.ndarray] = None,
        constraints: Optional[ConstraintSystem] = None,
        t0: float = 1.0,
    ):
        self.qp = qp
        self.mesh = mesh
        self.strategy = strategy
        self.num_v = num_v
        self._force_to_direction = force_to_direction
        self.constraints = constraints
        self.t0 = t0

    def direction_values(self, z: np.ndarray) -> np.ndarray:
        if self.strategy == QpStrategy.COUPLED:
            return z[:self.num_v]
        return self._force_to_direction @ z

    def force_values(self, z: np.ndarray) -> np.ndarray:
        if self.strategy == QpStrategy.COUPLED:
            return z[self.num_v:]
        return z

    def direction(self, z: np.ndarray) -> VectorFieldP1:
        return VectorFieldP1(self.mesh, self.direction_values(z))

    def force(self, z: np.ndarray) -> BoundaryScalarField:
        return BoundaryScalarField(self.mesh, self.force_values(z))

    def convexity_multipliers(self, ineq_multipliers: np.ndarray) -> np.ndarray:
        """Multipliers of C_i + t0 DC_i V <= 0, one per constraint; both strategies share these rows."""
        lam = np.asarray(ineq_multipliers, dtype=float).reshape(-1)
        if lam.size != self.qp.num_ineq:
            raise DimensionMismatchError(f'expected {self.qp.num_ineq} multipliers, got {lam.size}')
        return lam

    def feasible_direction(self, z: np.ndarray) -> VectorFieldP1:
        """
        direction(z) after the least-norm correction that turns every row with C_i + t0 DC_i V > 0
        into an equality. The solver meets the rows only to its tolerance.
        """
        values = np.array(self.direction_values(z), dtype=float)
        if self.constraints is None or not self.constraints.count:
            return VectorFieldP1(self.mesh, values)
        DC = sp.csr_matrix(self.t0 * self.constraints.jacobian)
        residual = self.constraints.values + DC @ values
        rows = np.flatnonzero(residual > 0)
        if rows.size:
            A = DC[rows]
            weights = lstsq((A @ A.T).toarray(), residual[rows])[0]
            values -= A.T @ weights
            _LOGGER.debug(f'Projected the direction onto {rows.size} linearized rows, max residual was '
                          f'{residual[rows].max():.3e}')
        return VectorFieldP1(self.mesh, values)


def build_direction_qp(
    E: SparseSymmetricOperator,
    N: sp.spmatrix,
    grad: ShapeGradient,
    constraints: Optional[ConstraintSystem],
    t0: float,
    strategy: QpStrategy = QpStrategy.COUPLED,
) -> DirectionProblem:
    """
    minimize 1/2 E(V, V) + J'(V)  s.t.  C_i + t0 DC_i V <= 0,  E V = N F.

    Passing constraints=None drops the convexity rows.
    """
    if not t0 > 0:
        raise InvalidParameterError(f't0 must be positive, got {t0}')
    mesh = grad.mesh
    nv = E.n
    N = sp.csr_matrix(N)
    if nv != mesh.dim * mesh.num_vertices or N.shape[0] != nv:
        raise DimensionMismatchError(f'operators of size {nv} and {N.shape} do not match the shape gradient')
    nf = N.shape[1]

    if constraints is not None:
        if constraints.jacobian is None:
            raise DimensionMismatchError('constraint system has no jacobian')
        if constraints.jacobian.shape[1] != nv:
            raise MeshMismatchError('constraint jacobian does not match the mesh')
        DC = t0 * constraints.jacobian
        bound = -constraints.values
    else:
        DC = sp.csr_matrix((0, nv))
        bound = np.zeros(0)

    if strategy == QpStrategy.COUPLED:
        hessian = SparseSymmetricOperator(sp.block_diag([E.matrix, sp.csr_matrix((nf, nf))], format='csr'))
        linear = np.concatenate([grad.flat, np.zeros(nf)])
        ineq = sp.hstack([DC, sp.csr_matrix((DC.shape[0], nf))], format='csr')
        eq = sp.hstack([E.matrix, -N], format='csr')
        qp = QuadraticProgram(hessian, linear, ineq, bound, eq, np.zeros(nv))
        problem = DirectionProblem(qp, mesh, strategy, nv, constraints=constraints, t0=t0)
    else:
        S = splu(sp.csc_matrix(E.matrix)).solve(N.toarray())
        H = N.T @ S
        H = 0.5 * (H + H.T)
        qp = QuadraticProgram(SparseSymmetricOperator(H), S.T @ grad.flat, sp.csr_matrix(DC @ S), bound)
        problem = DirectionProblem(qp, mesh, strategy, nv, force_to_direction=S, constraints=constraints, t0=t0)

    _LOGGER.debug(f'Direction QP ({strategy.value}): {qp.n} unknowns, {qp.num_ineq} inequalities, '
                  f'{qp.num_eq} equalities')
    return problem
