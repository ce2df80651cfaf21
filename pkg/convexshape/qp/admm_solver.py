"""
Operator-splitting (ADMM) solver for convex quadratic programs

    minimize 1/2 z'Hz + g'z  s.t.  Az <= b,  Cz = d

The problem is stacked as l <= K z <= u with K = [A; C], l = [-inf; d], u = [b; d].
Each iteration solves one quasi-definite KKT system whose factorization is reused
until rho changes. Data are Ruiz-equilibrated; residuals and termination are measured
on the unscaled problem.
"""

import logging
from dataclasses import replace
from typing import Optional, Tuple

import numpy as np
import scipy.sparse as sp
from scipy.sparse.linalg import norm as sparse_norm, splu

from ..deform import QuadraticProgram
from ..exception import DimensionMismatchError
from .const import (
    ADAPTIVE_RHO_TOLERANCE, INFEASIBILITY_TOLERANCE, POLISH_DELTA, RHO_EQ_FACTOR, RHO_MAX, RHO_MIN, SCALING_MAX,
    SCALING_MIN
)
from .kkt import kkt_residuals_at
from .qp_settings import QpSettings
from .qp_solution import QpSolution
from .qp_status import QpStatus

_LOGGER = logging.getLogger(__name__)

WarmStart = Tuple[np.ndarray, np.ndarray, np.ndarray]


def _limit_scaling(v: np.ndarray) -> np.ndarray:
    v = np.where(v < SCALING_MIN, 1.0, v)
    return np.minimum(v, SCALING_MAX)


def _inf_norm(x: np.ndarray) -> float:
    return float(np.max(np.abs(x))) if x.size else 0.0


class _ScaledData:
    """Ruiz equilibration of [[P, K'], [K, 0]] followed by cost scaling"""

    def __init__(self, P: sp.csc_matrix, q: np.ndarray, K: sp.csc_matrix, l: np.ndarray, u: np.ndarray,
                 iterations: int):
        n, m = P.shape[0], K.shape[0]
        D = np.ones(n)
        E = np.ones(m)
        c = 1.0
        for _ in range(iterations):
            if n:
                col_p = sparse_norm(P, np.inf, axis=0) if P.nnz else np.zeros(n)
                col_k = sparse_norm(K, np.inf, axis=0) if K.nnz else np.zeros(n)
                d_step = 1.0 / np.sqrt(_limit_scaling(np.maximum(col_p, col_k)))
            else:
                d_step = np.ones(0)
            e_step = 1.0 / np.sqrt(_limit_scaling(sparse_norm(K, np.inf, axis=1))) if (m and K.nnz) else np.ones(m)
            P = sp.diags(d_step) @ P @ sp.diags(d_step)
            K = sp.diags(e_step) @ K @ sp.diags(d_step)
            q = d_step * q
            D *= d_step
            E *= e_step

            p_mean = float(np.mean(sparse_norm(P, np.inf, axis=0))) if (n and P.nnz) else 0.0
            gamma = 1.0 / _limit_scaling(np.array([max(p_mean, _inf_norm(q))]))[0]
            P = gamma * P
            q = gamma * q
            c *= gamma

        self.P = sp.csc_matrix(P)
        self.q = q
        self.K = sp.csc_matrix(K)
        self.KT = sp.csc_matrix(K.T)
        with np.errstate(invalid='ignore'):
            self.l = np.where(np.isfinite(l), E * l, -np.inf)
            self.u = np.where(np.isfinite(u), E * u, np.inf)
        self.D = D
        self.E = E
        self.c = c


class AdmmSolver:

    def __init__(self, qp: QuadraticProgram, settings: QpSettings):
        self.qp = qp
        self.settings = settings
        self.n = qp.n
        self.num_ineq = qp.num_ineq
        self.m = qp.num_ineq + qp.num_eq

        P = sp.csc_matrix(qp.hessian.matrix)
        K = sp.vstack([qp.ineq_matrix, qp.eq_matrix], format='csc')
        l = np.concatenate([np.full(qp.num_ineq, -np.inf), qp.eq_bound])
        u = np.concatenate([qp.ineq_bound, qp.eq_bound])
        self.data = _ScaledData(P, np.asarray(qp.linear, dtype=float), K, l, u, settings.scaling_iter)

        self._equality = np.zeros(self.m, dtype=bool)
        self._equality[qp.num_ineq:] = True
        self.rho = settings.rho
        self._factorize()

    def _rho_vector(self) -> np.ndarray:
        return np.where(self._equality, RHO_EQ_FACTOR * self.rho, self.rho)

    def _factorize(self):
        self.rho_vec = self._rho_vector()
        if not self.m:
            self._lu = splu(sp.csc_matrix(self.data.P + self.settings.sigma * sp.identity(self.n)))
            return
        kkt = sp.bmat([
            [self.data.P + self.settings.sigma * sp.identity(self.n), self.data.KT],
            [self.data.K, -sp.diags(1.0 / self.rho_vec)],
        ], format='csc')
        self._lu = splu(kkt)

    def _project(self, z: np.ndarray) -> np.ndarray:
        return np.minimum(np.maximum(z, self.data.l), self.data.u)

    def _unscale(self, x: np.ndarray, y: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        z = self.data.D * x
        mult = self.data.E * y / self.data.c
        return z, np.maximum(mult[:self.num_ineq], 0.0), mult[self.num_ineq:]

    def _residuals(self, x: np.ndarray, z: np.ndarray, y: np.ndarray) -> Tuple[float, float, float]:
        """Unscaled primal and dual residuals plus the residual-balancing rho estimate."""
        data = self.data
        Kx = data.K @ x
        Px = data.P @ x
        Kty = data.KT @ y
        pri = _inf_norm((Kx - z) / data.E) if self.m else 0.0
        dua = _inf_norm((Px + data.q + Kty) / data.D) / data.c if self.n else 0.0

        pri_scaled = _inf_norm(Kx - z) / max(_inf_norm(Kx), _inf_norm(z), 1e-30)
        dua_scaled = _inf_norm(Px + data.q + Kty) / max(_inf_norm(Px), _inf_norm(Kty), _inf_norm(data.q), 1e-30)
        rho_estimate = self.rho * np.sqrt(pri_scaled / max(dua_scaled, 1e-30))
        return pri, dua, float(np.clip(rho_estimate, RHO_MIN, RHO_MAX))

    def _is_primal_infeasible(self, delta_y: np.ndarray) -> bool:
        norm = _inf_norm(delta_y)
        if norm <= INFEASIBILITY_TOLERANCE:
            return False
        v = delta_y / norm
        data = self.data
        v_pos = np.maximum(v, 0.0)
        v_neg = np.minimum(v, 0.0)
        finite_u = np.isfinite(data.u)
        finite_l = np.isfinite(data.l)
        if np.any(v_pos[~finite_u] > 0) or np.any(v_neg[~finite_l] < 0):
            return False
        support = float(data.u[finite_u] @ v_pos[finite_u] + data.l[finite_l] @ v_neg[finite_l])
        if support >= -INFEASIBILITY_TOLERANCE:
            return False
        return _inf_norm((data.KT @ v) / data.D) < INFEASIBILITY_TOLERANCE

    def _active_set(self, z: np.ndarray, y: np.ndarray) -> np.ndarray:
        active = self._equality.copy()
        ineq = ~self._equality
        active[ineq] = (self.data.u[ineq] - z[ineq]) < y[ineq]
        return active

    def _polish(self, active: np.ndarray) -> Optional[Tuple[np.ndarray, np.ndarray, np.ndarray]]:
        """Solve the equality-constrained problem on the guessed active set, unscaled."""
        qp = self.qp
        K = sp.vstack([qp.ineq_matrix, qp.eq_matrix], format='csr')
        bound = np.concatenate([qp.ineq_bound, qp.eq_bound])
        rows = np.flatnonzero(active)
        K_act = K[rows]
        P = sp.csc_matrix(qp.hessian.matrix)
        n, k = self.n, rows.size

        exact = sp.bmat([[P, K_act.T], [K_act, None]], format='csc') if k else P
        delta = POLISH_DELTA
        regular = sp.bmat([
            [P + delta * sp.identity(n), K_act.T],
            [K_act, -delta * sp.identity(k)],
        ], format='csc') if k else sp.csc_matrix(P + delta * sp.identity(n))
        try:
            lu = splu(regular)
        except RuntimeError:
            return None

        rhs = np.concatenate([-np.asarray(qp.linear, dtype=float), bound[rows]])
        sol = lu.solve(rhs)
        for _ in range(self.settings.polish_refine_iter):
            sol += lu.solve(rhs - exact @ sol)
        if not np.all(np.isfinite(sol)):
            return None

        mult = np.zeros(self.m)
        mult[rows] = sol[n:]
        return sol[:n], mult[:self.num_ineq], mult[self.num_ineq:]

    def _initial_iterates(self, warm_start: Optional[WarmStart]) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        if warm_start is None:
            return np.zeros(self.n), np.zeros(self.m), np.zeros(self.m)
        z0, lam0, nu0 = (np.asarray(a, dtype=float) for a in warm_start)
        if z0.size != self.n or lam0.size != self.num_ineq or nu0.size != self.m - self.num_ineq:
            raise DimensionMismatchError('warm start does not match the QP dimensions')
        x = z0 / self.data.D
        y = self.data.c * np.concatenate([lam0, nu0]) / self.data.E
        return x, self._project(self.data.K @ x), y

    def solve(self, warm_start: Optional[WarmStart] = None) -> QpSolution:
        settings = self.settings
        tol = settings.tol
        data = self.data
        sigma, alpha = settings.sigma, settings.alpha
        x, z, y = self._initial_iterates(warm_start)
        last_polish = None

        def finish(primal, lam, nu, status, iterations, polished=False):
            kkt = kkt_residuals_at(self.qp, primal, lam, nu)
            _LOGGER.debug(f'QP {status.stringify()} after {iterations} iterations '
                          f'(max KKT residual {kkt.max():.3e}, polished={polished})')
            return QpSolution(primal, lam, nu, status, kkt, iterations, polished)

        for it in range(1, settings.max_iter + 1):
            y_prev = y
            rhs = np.concatenate([sigma * x - data.q, z - y / self.rho_vec])
            sol = self._lu.solve(rhs)
            x_tilde = sol[:self.n]
            z_tilde = z + (sol[self.n:] - y) / self.rho_vec

            x = alpha * x_tilde + (1.0 - alpha) * x
            z_relaxed = alpha * z_tilde + (1.0 - alpha) * z
            z = self._project(z_relaxed + y / self.rho_vec)
            y = y + self.rho_vec * (z_relaxed - z)

            pri, dua, rho_estimate = self._residuals(x, z, y)
            if pri <= tol and dua <= tol:
                primal, lam, nu = self._unscale(x, y)
                kkt = kkt_residuals_at(self.qp, primal, lam, nu)
                if kkt.within(tol):
                    return finish(primal, lam, nu, QpStatus.SOLVED, it)

            if it % settings.adaptive_rho_interval:
                continue

            if self.m and self._is_primal_infeasible(y - y_prev):
                primal, lam, nu = self._unscale(x, y)
                return finish(primal, lam, nu, QpStatus.INFEASIBLE, it)

            if settings.polish:
                active = self._active_set(z, y)
                key = active.tobytes()
                if key != last_polish:
                    last_polish = key
                    polished = self._polish(active)
                    if polished is not None and kkt_residuals_at(self.qp, *polished).within(tol):
                        return finish(*polished, QpStatus.SOLVED, it, polished=True)

            ratio = rho_estimate / self.rho
            if ratio > ADAPTIVE_RHO_TOLERANCE or ratio < 1.0 / ADAPTIVE_RHO_TOLERANCE:
                _LOGGER.debug(f'QP iteration {it}: rho {self.rho:.3e} -> {rho_estimate:.3e}')
                self.rho = rho_estimate
                self._factorize()

        primal, lam, nu = self._unscale(x, y)
        if settings.polish:
            polished = self._polish(self._active_set(z, y))
            if polished is not None and kkt_residuals_at(self.qp, *polished).within(tol):
                return finish(*polished, QpStatus.SOLVED, settings.max_iter, polished=True)
        _LOGGER.warning(f'QP reached {settings.max_iter} iterations (primal {pri:.3e}, dual {dua:.3e})')
        return finish(primal, lam, nu, QpStatus.MAX_ITER, settings.max_iter)


def solve_qp(
    qp: QuadraticProgram,
    tol: Optional[float] = None,
    max_iter: Optional[int] = None,
    settings: Optional[QpSettings] = None,
    warm_start: Optional[WarmStart] = None,
) -> QpSolution:
    """
    Solve a convex QP. Returns status solved only when every KKT residual is within tol;
    max_iter and infeasible outcomes carry the last iterate.
    """
    settings = settings or QpSettings()
    if tol is not None or max_iter is not None:
        settings = replace(
            settings,
            tol=settings.tol if tol is None else tol,
            max_iter=settings.max_iter if max_iter is None else max_iter,
        )
    return AdmmSolver(qp, settings).solve(warm_start)
