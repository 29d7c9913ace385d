"""
配置の改善手続き（2種類の変換）

1. 0.65 未満の距離に相手がいて、自身のマイナスエネルギーが負の粒子を、
   他のすべての粒子から 2(n−1) を超える位置へ移す。
2. 直径 D が 2(n−1) を超える間、直径の線分を n−1 等分した厚さ L = D/(n−1) の
   スラブのうち内部に点のない最初のものを選び、その先の点を線分方向に 1 だけ寄せる。

どちらの変換も全マイナスエネルギーを減らさない。最後に x₁ が原点になるよう平行移動する。
"""

import logging
from fractions import Fraction

import numpy as np

from ljcert.analysis.cluster import Configuration, diameter, per_particle_minus_energies
from ljcert.constants.bounds import DEFAULT_CLAIMS

logger = logging.getLogger(__name__)

MAX_CONTRACTIONS = 100_000


def _close_pairs(points: np.ndarray, limit: float) -> list[tuple[int, int]]:
    diff = points[:, None, :] - points[None, :, :]
    dist = np.sqrt(np.sum(diff * diff, axis=2))
    i, j = np.nonzero(np.triu(dist < limit, k=1))
    return list(zip(i.tolist(), j.tolist()))


def _separate(points: np.ndarray, limit: float) -> tuple[np.ndarray, int]:
    n = len(points)
    moved = 0
    while True:
        pairs = _close_pairs(points, limit)
        if not pairs:
            return points, moved
        minus = per_particle_minus_energies(Configuration(points))
        candidate = None
        for i, j in pairs:
            k = i if minus[i] <= minus[j] else j
            if minus[k] < 0:
                candidate = k
                break
        if candidate is None:
            logger.warning("0.65 未満の組がありますが、マイナスエネルギーが負の粒子がないため移動しません")
            return points, moved
        others = np.delete(points, candidate, axis=0)
        target = others.mean(axis=0)
        target[0] = others[:, 0].max() + 2 * n - 1
        points = points.copy()
        points[candidate] = target
        moved += 1
        logger.debug(f"粒子 {candidate} を {target.tolist()} へ移動")


def _empty_slab(t: np.ndarray, a: int, b: int, slab: float, count: int) -> int | None:
    """端点 a, b を除いた点が内部に入らない最初のスラブの番号"""
    inner = np.ones(len(t), dtype=bool)
    inner[[a, b]] = False
    ti = t[inner]
    for k in range(count):
        lo, hi = k * slab, (k + 1) * slab
        if not np.any((ti > lo) & (ti < hi)):
            return k
    return None


def _contract(points: np.ndarray) -> tuple[np.ndarray, int]:
    n = len(points)
    limit = 2.0 * (n - 1)
    contractions = 0
    while contractions < MAX_CONTRACTIONS:
        d, a, b = diameter(Configuration(points))
        if d <= limit:
            return points, contractions
        direction = (points[b] - points[a]) / d
        t = (points - points[a]) @ direction
        slab = d / (n - 1)
        # 端点以外の n−2 点は高々 n−2 個のスラブにしか入らない
        empty = _empty_slab(t, a, b, slab, n - 1)
        assert empty is not None
        shift = t >= (empty + 1) * slab
        shift[a] = False
        shift[b] = True
        points = points.copy()
        points[shift] -= direction
        contractions += 1
    logger.warning(f"スラブ縮約が上限 {MAX_CONTRACTIONS} 回に達しました")
    return points, contractions


def compactify(q: Configuration, compact_distance: Fraction = DEFAULT_CLAIMS.compact_distance) -> Configuration:
    """0.65 ≤ d(x, y) ≤ 2(n−1) を満たす配置へ変換する。"""
    points = np.array(q.points, dtype=np.float64)
    points, moved = _separate(points, float(compact_distance))
    points, contractions = _contract(points)
    logger.debug(f"compactify: 移動 {moved} 回, 縮約 {contractions} 回")
    return Configuration(points - points[0])
