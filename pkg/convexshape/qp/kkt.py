from typing import TYPE_CHECKING, NamedTuple

import numpy as np

from ..deform import QuadraticProgram
from ..exception import DimensionMismatchError

if TYPE_CHECKING:
    from .qp_solution import QpSolution


class KktResiduals(NamedTuple):
    """Infinity norms of the KKT conditions of min 1/2 z'Hz + g'z, Az <= b, Cz = d"""
    stationarity: float
    primal_ineq: float
    primal_eq: float
    dual: float
    complementarity: float

    @property
    def primal(self) -> float:
        return max(self.primal_ineq, self.primal_eq)

    def max(self) -> float:
        return max(self)

    def within(self, tol: float) -> bool:
        return self.max() <= tol


def _inf_norm(x: np.ndarray) -> float:
    return float(np.max(np.abs(x))) if x.size else 0.0


def kkt_residuals_at(qp: QuadraticProgram, z: np.ndarray, lam: np.ndarray, nu: np.ndarray) -> KktResiduals:
    z = np.asarray(z, dtype=float)
    lam = np.asarray(lam, dtype=float)
    nu = np.asarray(nu, dtype=float)
    if z.size != qp.n or lam.size != qp.num_ineq or nu.size != qp.num_eq:
        raise DimensionMismatchError(
            f'expected primal {qp.n}, multipliers {qp.num_ineq}/{qp.num_eq}; got {z.size}, {lam.size}/{nu.size}')
    slack = qp.ineq_matrix @ z - qp.ineq_bound
    stationarity = qp.hessian @ z + qp.linear + qp.ineq_matrix.T @ lam + qp.eq_matrix.T @ nu
    return KktResiduals(
        stationarity=_inf_norm(stationarity),
        primal_ineq=_inf_norm(np.maximum(slack, 0.0)),
        primal_eq=_inf_norm(qp.eq_matrix @ z - qp.eq_bound),
        dual=_inf_norm(np.minimum(lam, 0.0)),
        complementarity=_inf_norm(lam * slack),
    )


def kkt_residuals(qp: QuadraticProgram, sol: "QpSolution") -> KktResiduals:
    return kkt_residuals_at(qp, sol.primal, sol.ineq_multipliers, sol.eq_multipliers)
