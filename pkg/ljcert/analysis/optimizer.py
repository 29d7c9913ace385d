"""
局所最適化

seed による初期摂動 → scipy の BFGS → 有限差分ヘッセ行列による Newton 仕上げ。
エネルギーが有限でない刻みは棄却する。入力よりエネルギーが上がった場合は入力を返す。
"""

import logging
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt
from scipy import optimize

from ljcert.analysis.cluster import Configuration, energy_and_gradient, total_energy
from ljcert.constants.numerics import OPTIMIZER_DEFAULT_JITTER, OPTIMIZER_DEFAULT_TOL, OPTIMIZER_MAX_ITER

logger = logging.getLogger(__name__)

FloatArray = npt.NDArray[np.float64]

_NEWTON_STEPS = 30
_HESSIAN_STEP = 1e-6


@dataclass(frozen=True)
class OptimizerParams:
    tol: float = OPTIMIZER_DEFAULT_TOL
    max_iter: int = OPTIMIZER_MAX_ITER
    jitter: float = OPTIMIZER_DEFAULT_JITTER


@dataclass(frozen=True)
class MinimizationResult:
    configuration: Configuration
    energy: float
    gradient_norm: float
    iterations: int
    converged: bool


def _grad_norm(grad: FloatArray) -> float:
    return float(np.max(np.abs(grad))) if grad.size else 0.0


def _numerical_hessian(x: FloatArray) -> FloatArray:
    n = x.size
    hess = np.empty((n, n))
    for k in range(n):
        step = np.zeros(n)
        step[k] = _HESSIAN_STEP
        _, gp = energy_and_gradient(x + step)
        _, gm = energy_and_gradient(x - step)
        hess[:, k] = (gp - gm) / (2.0 * _HESSIAN_STEP)
    return 0.5 * (hess + hess.T)


def _newton_polish(x: FloatArray, tol: float) -> tuple[FloatArray, int]:
    """勾配の最大ノルムが tol 以下になるまで Newton 刻みを当てる。

    並進・回転のゼロ固有値は最小二乗解で除く。勾配ノルムが減らない刻みは半減し、
    それでも駄目なら打ち切る。
    """
    energy, grad = energy_and_gradient(x)
    steps = 0
    for steps in range(1, _NEWTON_STEPS + 1):
        if _grad_norm(grad) <= tol:
            return x, steps - 1
        delta, *_ = np.linalg.lstsq(_numerical_hessian(x), -grad, rcond=1e-10)
        t = 1.0
        while t > 1e-6:
            candidate = x + t * delta
            e_new, g_new = energy_and_gradient(candidate)
            if np.isfinite(e_new) and _grad_norm(g_new) < _grad_norm(grad) and e_new <= energy + 1e-10 * abs(energy):
                x, energy, grad = candidate, e_new, g_new
                break
            t *= 0.5
        else:
            break
    return x, steps


def minimize_energy(q: Configuration, seed: int, params: OptimizerParams | None = None) -> MinimizationResult:
    p = params or OptimizerParams()
    start_energy = total_energy(q)
    rng = np.random.default_rng(seed)
    x0 = q.points.ravel() + p.jitter * rng.standard_normal(q.points.size)

    res = optimize.minimize(
        energy_and_gradient,
        x0,
        jac=True,
        method="BFGS",
        options={"gtol": p.tol, "norm": np.inf, "maxiter": p.max_iter},
    )
    x = np.asarray(res.x, dtype=np.float64)
    energy, grad = energy_and_gradient(x)
    if not np.isfinite(energy):
        x = q.points.ravel().copy()
        energy, grad = energy_and_gradient(x)
    iterations = int(res.nit)
    if _grad_norm(grad) > p.tol:
        x, extra = _newton_polish(x, p.tol)
        iterations += extra
        energy, grad = energy_and_gradient(x)

    if energy > start_energy:
        logger.warning(f"最適化後のエネルギー {energy:.12g} が入力 {start_energy:.12g} を上回ったため入力を返します")
        x = q.points.ravel().copy()
        energy, grad = energy_and_gradient(x)

    norm = _grad_norm(grad)
    converged = norm <= p.tol
    if converged:
        logger.info(f"最適化完了: E={energy:.10f}, |∇E|∞={norm:.3e}, 反復 {iterations}")
    else:
        logger.warning(f"勾配が許容値に届きません: |∇E|∞={norm:.3e} > {p.tol:.1e}")
    return MinimizationResult(
        configuration=Configuration(x.reshape(-1, 3)),
        energy=energy,
        gradient_norm=norm,
        iterations=iterations,
        converged=converged,
    )


def local_minimize(q: Configuration, seed: int, params: OptimizerParams | None = None) -> Configuration:
    """勾配法による局所最適化。seed が同じなら結果も同じ。"""
    return minimize_energy(q, seed, params).configuration
