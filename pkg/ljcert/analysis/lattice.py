"""
FCC 格子和による安定性定数の下界

格子ベクトルは (i, j, k)·scale/√2（i + j + k が偶数）で、最近接距離が scale。
1粒子あたりのエネルギーは (1/2) Σ_{0≠v, ‖v‖≤R} Φ(‖v‖)。
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import numpy.typing as npt
from scipy import optimize

from ljcert.analysis.cluster import phi_of_distance
from ljcert.constants.numerics import FCC_DEFAULT_CUTOFF_FACTOR, FCC_MIN_CUTOFF_FACTOR, FCC_SCALE_SEARCH_BOUNDS
from ljcert.utils.errors import DomainError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LatticeSumResult:
    scale: float
    per_particle_energy: float
    cutoff: float
    tail_bound: float

    @property
    def density(self) -> float:
        return math.sqrt(2.0) / self.scale**3

    @property
    def corrected_energy(self) -> float:
        """切り捨てた引力部分を連続体近似で補正した値"""
        return self.per_particle_energy - self.tail_bound

    @property
    def stability_lower_bound(self) -> float:
        """B ≥ −(補正後エネルギー) を小数第2位で切り捨てた値"""
        return math.floor(-self.corrected_energy * 100.0) / 100.0


@lru_cache(maxsize=8)
def fcc_unit_norms(cutoff_factor: float) -> npt.NDArray[np.float64]:
    """最近接距離 1 の FCC 格子で 0 < ‖v‖ ≤ cutoff_factor となる全ベクトルのノルム"""
    n = int(math.ceil(cutoff_factor * math.sqrt(2.0)))
    axis = np.arange(-n, n + 1)
    i, j, k = np.meshgrid(axis, axis, axis, indexing="ij")
    even = (i + j + k) % 2 == 0
    sq = (i * i + j * j + k * k)[even].astype(np.float64) / 2.0
    norms = np.sqrt(sq[(sq > 0) & (sq <= cutoff_factor * cutoff_factor + 1e-12)])
    norms.sort()
    norms.setflags(write=False)
    return norms


def fcc_energy_per_particle(scale: float, cutoff: float | None = None) -> LatticeSumResult:
    if scale <= 0:
        raise DomainError(f"scale は正でなければなりません: {scale}")
    radius = FCC_DEFAULT_CUTOFF_FACTOR * scale if cutoff is None else float(cutoff)
    if radius < FCC_MIN_CUTOFF_FACTOR * scale:
        raise DomainError(f"cutoff は {FCC_MIN_CUTOFF_FACTOR}·scale 以上にしてください: cutoff={radius}, scale={scale}")
    norms = fcc_unit_norms(round(radius / scale, 12))
    energy = 0.5 * float(np.sum(phi_of_distance(scale * norms)))
    density = math.sqrt(2.0) / scale**3
    # (1/2)·ρ·∫_R^∞ 2r⁻⁶·4πr² dr
    tail = 4.0 * math.pi * density / (3.0 * radius**3)
    return LatticeSumResult(scale=scale, per_particle_energy=energy, cutoff=radius, tail_bound=tail)


def optimize_fcc_scale(cutoff_factor: float = FCC_DEFAULT_CUTOFF_FACTOR, *, radius: float | None = None) -> LatticeSumResult:
    """
    補正後エネルギーを最小にする scale を求める。

    radius を与えると打ち切り半径をその値に固定し、与えなければ cutoff_factor·scale とする。
    """

    def _cutoff(scale: float) -> float:
        return cutoff_factor * scale if radius is None else radius

    def objective(scale: float) -> float:
        return fcc_energy_per_particle(scale, _cutoff(scale)).corrected_energy

    res = optimize.minimize_scalar(objective, bounds=FCC_SCALE_SEARCH_BOUNDS, method="bounded", options={"xatol": 1e-10})
    result = fcc_energy_per_particle(float(res.x), _cutoff(float(res.x)))
    logger.info(f"FCC 最適 scale={result.scale:.6f}, 1粒子あたり {result.corrected_energy:.6f}")
    return result


def coordination_shells(cutoff_factor: float, decimals: int = 9) -> list[tuple[float, int]]:
    """(距離, 個数) の殻の一覧（最近接距離 1）"""
    norms = np.round(fcc_unit_norms(cutoff_factor), decimals)
    values, counts = np.unique(norms, return_counts=True)
    return [(float(v), int(c)) for v, c in zip(values, counts)]
