from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp

from ..exception import DimensionMismatchError
from ..fem import SparseSymmetricOperator


@dataclass
class QuadraticProgram:
    """
    minimize  1/2 z^T H z + g^T z
    s.t.      A z <= b   (inequality rows)
              C z  = d   (equality rows)
    """
    hessian: SparseSymmetricOperator
    linear: np.ndarray
    ineq_matrix: Optional[sp.csr_matrix] = None
    ineq_bound: Optional[np.ndarray] = None
    eq_matrix: Optional[sp.csr_matrix] = None
    eq_bound: Optional[np.ndarray] = None

    def __post_init__(self):
        n = self.hessian.n
        self.linear = np.asarray(self.linear, dtype=float).reshape(-1)
        if self.linear.size != n:
            raise DimensionMismatchError(f'linear term has {self.linear.size} entries, hessian is {n}x{n}')
        self.ineq_matrix, self.ineq_bound = _rows(self.ineq_matrix, self.ineq_bound, n, 'inequality')
        self.eq_matrix, self.eq_bound = _rows(self.eq_matrix, self.eq_bound, n, 'equality')
        for name in ('linear', 'ineq_bound', 'eq_bound'):
            if not np.all(np.isfinite(getattr(self, name))):
                raise DimensionMismatchError(f'{name} contains non-finite values')

    @property
    def n(self) -> int:
        return self.hessian.n

    @property
    def num_ineq(self) -> int:
        return self.ineq_matrix.shape[0]

    @property
    def num_eq(self) -> int:
        return self.eq_matrix.shape[0]

    def objective(self, z: np.ndarray) -> float:
        return 0.5 * self.hessian.quadratic_form(z) + float(self.linear @ z)

    def scaled(self, s: float) -> "QuadraticProgram":
        """Same feasible set, objective multiplied by s"""
        return QuadraticProgram(self.hessian * s, self.linear * s,
                                self.ineq_matrix, self.ineq_bound, self.eq_matrix, self.eq_bound)


def _rows(matrix, bound, n: int, what: str):
    if matrix is None:
        return sp.csr_matrix((0, n)), np.zeros(0)
    matrix = sp.csr_matrix(matrix, dtype=float)
    bound = np.asarray(bound, dtype=float).reshape(-1)
    if matrix.shape[1] != n or matrix.shape[0] != bound.size:
        raise DimensionMismatchError(
            f'{what} rows have shape {matrix.shape} with {bound.size} bounds, expected {n} columns')
    return matrix, bound
