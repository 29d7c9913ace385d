"""
粒子配置のエネルギー計算

全エネルギーは非順序対ごとに Φ(x − y) を1回ずつ足す。粒子 x のマイナスエネルギーは
Σ_{z≠x} h(‖x − z‖)。全エネルギー = −(1/2) Σ マイナスエネルギー。
"""

from collections.abc import Sequence

import numpy as np
import numpy.typing as npt
from scipy.spatial.distance import pdist, squareform

from ljcert.utils.errors import ConfigurationError

FloatArray = npt.NDArray[np.float64]


class Configuration:
    """3次元の点の有限集合（N×3 配列、読み取り専用）"""

    __slots__ = ("_points",)

    def __init__(self, points: "Sequence[Sequence[float]] | FloatArray"):
        arr = np.array(points, dtype=np.float64)
        if arr.ndim != 2 or arr.shape[1] != 3:
            raise ConfigurationError(f"点は N×3 の配列で与えてください: shape={arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise ConfigurationError("座標に有限でない値が含まれています")
        arr.setflags(write=False)
        self._points = arr

    @property
    def points(self) -> FloatArray:
        return self._points

    def __len__(self) -> int:
        return int(self._points.shape[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Configuration):
            return NotImplemented
        return bool(np.array_equal(self._points, other._points))

    def __repr__(self) -> str:
        return f"Configuration(n={len(self)})"

    def translated(self, offset: "Sequence[float] | FloatArray") -> "Configuration":
        return Configuration(self._points + np.asarray(offset, dtype=np.float64))


def _require_pairs(q: Configuration) -> FloatArray:
    if len(q) < 2:
        raise ConfigurationError(f"粒子が2個以上必要です: {len(q)} 個")
    distances = pdist(q.points)
    if np.any(distances == 0.0):
        raise ConfigurationError("重なった点があります")
    return distances


def phi_of_distance(r: "float | FloatArray") -> "float | FloatArray":
    inv6 = np.power(r, -6.0)
    return inv6 * inv6 - 2.0 * inv6


def h_of_distance(r: "float | FloatArray") -> "float | FloatArray":
    return -phi_of_distance(r)


def total_energy(q: Configuration) -> float:
    """Σ_{非順序対} Φ(x − y)"""
    return float(np.sum(phi_of_distance(_require_pairs(q))))


def per_particle_minus_energies(q: Configuration) -> FloatArray:
    """各粒子のマイナスエネルギー Σ_{z≠x} h(‖x − z‖)"""
    matrix = squareform(h_of_distance(_require_pairs(q)))
    return np.sum(matrix, axis=1)


def single_particle_minus_energy(q: Configuration, i: int) -> float:
    if not 0 <= i < len(q):
        raise ConfigurationError(f"粒子番号が範囲外です: {i} (粒子数 {len(q)})")
    _require_pairs(q)
    diffs = np.delete(q.points, i, axis=0) - q.points[i]
    r = np.sqrt(np.sum(diffs * diffs, axis=1))
    return float(np.sum(h_of_distance(r)))


def min_distance(q: Configuration) -> float:
    if len(q) < 2:
        raise ConfigurationError(f"粒子が2個以上必要です: {len(q)} 個")
    return float(np.min(pdist(q.points)))


def diameter(q: Configuration) -> tuple[float, int, int]:
    """最大距離とそれを実現する粒子番号の組（番号の小さい順で最初のもの）"""
    matrix = squareform(pdist(q.points))
    flat = int(np.argmax(matrix))
    i, j = divmod(flat, len(q))
    return float(matrix[i, j]), min(i, j), max(i, j)


def energy_and_gradient(flat: FloatArray) -> tuple[float, FloatArray]:
    """平坦化した座標 (3N,) に対する全エネルギーと解析的勾配

    重なった点があれば (inf, 0) を返し、呼び出し側がその刻みを棄却する。
    和の順序は固定。
    """
    x = np.asarray(flat, dtype=np.float64).reshape(-1, 3)
    diff = x[:, None, :] - x[None, :, :]
    r2 = np.sum(diff * diff, axis=2)
    np.fill_diagonal(r2, np.inf)
    if np.any(r2 == 0.0):
        return float("inf"), np.zeros_like(flat, dtype=np.float64)
    inv2 = 1.0 / r2
    inv6 = inv2**3
    iu = np.triu_indices(len(x), k=1)
    energy = float(np.sum(inv6[iu] * inv6[iu] - 2.0 * inv6[iu]))
    # dΦ/dr · (1/r) = −12 r⁻¹⁴ + 12 r⁻⁸
    coef = (-12.0 * inv6 * inv6 + 12.0 * inv6) * inv2
    grad = np.sum(coef[:, :, None] * diff, axis=1)
    if not np.isfinite(energy) or not np.all(np.isfinite(grad)):
        return float("inf"), np.zeros_like(flat, dtype=np.float64)
    return energy, grad.ravel()
