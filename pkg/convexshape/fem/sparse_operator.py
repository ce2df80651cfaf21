import numpy as np
import scipy.sparse as sp

from ..exception import DimensionMismatchError


class SparseSymmetricOperator:
    """Symmetric sparse matrix in compressed-row storage."""

    def __init__(self, matrix):
        matrix = sp.csr_matrix(matrix, dtype=float)
        if matrix.shape[0] != matrix.shape[1]:
            raise DimensionMismatchError(f'operator must be square, got {matrix.shape}')
        matrix.sum_duplicates()
        self.matrix = matrix

    @classmethod
    def from_triplets(cls, rows, cols, data, n: int) -> "SparseSymmetricOperator":
        return cls(sp.coo_matrix((np.ravel(data), (np.ravel(rows), np.ravel(cols))), shape=(n, n)).tocsr())

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def shape(self):
        return self.matrix.shape

    def __matmul__(self, x: np.ndarray) -> np.ndarray:
        return self.matrix @ x

    def __add__(self, other: "SparseSymmetricOperator") -> "SparseSymmetricOperator":
        if other.n != self.n:
            raise DimensionMismatchError(f'cannot add operators of size {self.n} and {other.n}')
        return SparseSymmetricOperator(self.matrix + other.matrix)

    def __mul__(self, scalar: float) -> "SparseSymmetricOperator":
        return SparseSymmetricOperator(self.matrix * float(scalar))

    __rmul__ = __mul__

    def quadratic_form(self, x: np.ndarray, y: np.ndarray = None) -> float:
        """x^T A y (y defaults to x)"""
        y = x if y is None else y
        return float(x @ (self.matrix @ y))

    def restrict(self, free: np.ndarray) -> "SparseSymmetricOperator":
        """Principal submatrix on the rows/columns selected by a boolean mask or index array."""
        return SparseSymmetricOperator(self.matrix[free][:, free])

    def diagonal(self) -> np.ndarray:
        return self.matrix.diagonal()

    def is_symmetric(self, rtol: float = 1e-14) -> bool:
        diff = abs(self.matrix - self.matrix.T)
        scale = abs(self.matrix).max() if self.matrix.nnz else 0.0
        return diff.nnz == 0 or diff.max() <= rtol * scale

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()

    def __repr__(self) -> str:
        return f'SparseSymmetricOperator(n={self.n}, nnz={self.matrix.nnz})'
