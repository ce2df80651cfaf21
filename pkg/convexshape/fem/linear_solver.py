import logging
from typing import Optional

import numpy as np
from scipy.sparse.linalg import LinearOperator, cg

from ..exception import SolverConvergenceError
from .const import CG_MAX_ITER_FACTOR
from .sparse_operator import SparseSymmetricOperator

_LOGGER = logging.getLogger(__name__)


def cg_solve(
    A: SparseSymmetricOperator,
    b: np.ndarray,
    tol: float,
    x0: Optional[np.ndarray] = None,
    jacobi: bool = False,
) -> np.ndarray:
    """
    Conjugate gradients to relative residual ||b - Ax|| <= tol ||b||, at most 10 n iterations.
    :param jacobi: precondition with the inverse diagonal
    :param x0: warm start
    """
    b = np.asarray(b, dtype=float)
    n = A.n
    bnorm = float(np.linalg.norm(b))
    if bnorm == 0.0:
        return np.zeros(n)

    M = None
    if jacobi:
        inv_diag = 1.0 / A.diagonal()
        M = LinearOperator((n, n), matvec=lambda r: inv_diag * r)

    iterations = 0

    def count(_):
        nonlocal iterations
        iterations += 1

    maxiter = CG_MAX_ITER_FACTOR * n
    x, info = cg(A.matrix, b, x0=x0, rtol=tol, atol=0.0, maxiter=maxiter, M=M, callback=count)
    residual = float(np.linalg.norm(b - A.matrix @ x)) / bnorm
    if info == 0 and residual > tol:
        # recursive residual drifted from the true one; restart once from x
        x, info = cg(A.matrix, b, x0=x, rtol=tol, atol=0.0, maxiter=maxiter, M=M, callback=count)
        residual = float(np.linalg.norm(b - A.matrix @ x)) / bnorm
    if info != 0 or residual > tol:
        raise SolverConvergenceError(iterations, residual)
    _LOGGER.debug(f'CG converged in {iterations} iterations, relative residual {residual:.2e}')
    return x
