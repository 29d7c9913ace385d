"""
主張される定数の一覧

証明で使われる数値（切り捨て小数を含む）はすべて厳密な有理数として保持する。
テストでは dataclasses.replace で 1% 不利な方向へ変更し、該当サブチェックが
FAIL に転じることを確認する。
"""

from dataclasses import dataclass
from fractions import Fraction


def _q(text: str) -> Fraction:
    return Fraction(text)


@dataclass(frozen=True)
class ClaimedConstants:
    # t(r) = A r⁻¹ − t_offset
    t_offset: Fraction = Fraction(25, 11)

    # 単一粒子のマイナスエネルギー上界 μ(a) < K / a³
    moment_bound_wide: Fraction = _q("26.95")     # ∫_{0.54} の 24 倍
    moment_bound_narrow: Fraction = _q("24.05")   # ∫_{0.64} の 24 倍
    near_origin_radius: Fraction = _q("0.89")
    max_spacing: Fraction = _q("0.7")
    min_spacing: Fraction = _q("0.6")
    truncation_wide: Fraction = _q("0.54")
    truncation_narrow: Fraction = _q("0.64")
    narrow_outer_limit: Fraction = _q("1.19")
    t_positive_limit: Fraction = _q("1.49")

    # 3.1-II の切り捨て二次式 c2·c² + r2·r² + r1·r + r0
    narrow_quadratic: tuple[Fraction, Fraction, Fraction, Fraction] = (
        _q("0.7224"), _q("-0.7225"), _q("1.2589"), _q("-0.5654"),
    )
    # c 方向の単調減少を示す二次式 q2·c² + q1·c + q0 > 0 (c ∈ [0.3, 0.35])
    decreasing_quadratic: tuple[Fraction, Fraction, Fraction] = (
        _q("-1.4451"), _q("1.0023"), _q("-0.16692"),
    )
    # c = 0.35 での (♣) の下界 k0 − k1·r − k2/r
    club_bound: tuple[Fraction, Fraction, Fraction] = (
        _q("22.021"), _q("12.639"), _q("8.343"),
    )

    # 最小粒子間距離
    compact_distance: Fraction = _q("0.65")
    min_distance: Fraction = _q("0.684")

    # 半径 0.49 の球と θ^{0.54}
    ball_radius: Fraction = _q("0.49")
    region_inner: Fraction = _q("0.51")
    region_split: Fraction = _q("0.9")
    region_outer: Fraction = _q("1.03")
    region2_limit: Fraction = _q("1")
    region3_limit: Fraction = _q("1.39")
    # r2·r² + r1·r + r0
    region2_quadratic: tuple[Fraction, Fraction, Fraction] = (
        _q("-0.7558"), _q("1.127"), _q("-0.2516"),
    )
    region3_quadratic: tuple[Fraction, Fraction, Fraction] = (
        _q("-1.0199"), _q("1.7357"), _q("-0.5418"),
    )

    # 重なり相殺と最終上界
    density_moment_bound: Fraction = _q("36")
    density_bound: Fraction = _q("113")
    stability_bound: Fraction = _q("14.316")


DEFAULT_CLAIMS = ClaimedConstants()

# FCC 格子による下界 B ≥ 8.61
FCC_LOWER_BOUND = _q("8.61")
