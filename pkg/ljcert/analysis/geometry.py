"""
2球の交わりの体積・球冠面積・球冠の高さ

π 以外はすべて有理数なので、π で割った値を厳密に計算してから
π の包含区間を掛ける。範囲外の d は全域的に扱う（交わりなし・包含）。
"""

from dataclasses import dataclass
from fractions import Fraction

from ljcert.analysis.interval import Interval, as_fraction, enclose_pi
from ljcert.constants.numerics import DEFAULT_ENCLOSURE_WIDTH
from ljcert.utils.errors import DomainError


@dataclass(frozen=True)
class BallPair:
    r1: Fraction
    r2: Fraction
    d: Fraction

    def __post_init__(self) -> None:
        for name in ("r1", "r2", "d"):
            object.__setattr__(self, name, as_fraction(getattr(self, name)))
        if self.r1 <= 0 or self.r2 <= 0:
            raise DomainError(f"半径は正でなければなりません: r1={self.r1}, r2={self.r2}")
        if self.d < 0:
            raise DomainError(f"中心間距離は非負でなければなりません: d={self.d}")

    def intersects(self) -> bool:
        return self.d <= self.r1 + self.r2

    def nested(self) -> bool:
        return self.d <= abs(self.r1 - self.r2)


def ball_volume_over_pi(radius: "Fraction | int | str") -> Fraction:
    return Fraction(4, 3) * as_fraction(radius) ** 3


def lens_volume_over_pi(p: BallPair) -> Fraction:
    if p.d >= p.r1 + p.r2:
        return Fraction(0)
    if p.nested():
        return ball_volume_over_pi(min(p.r1, p.r2))
    s = p.r1 + p.r2 - p.d
    return s * s * (p.d * p.d + 2 * p.d * (p.r1 + p.r2) - 3 * (p.r1 - p.r2) ** 2) / (12 * p.d)


def cap_height(p: BallPair) -> Interval:
    """S₁ のうち B₂ 内にある球冠の高さ (1/2d)(r1+r2−d)(r2−r1+d)"""
    if p.d == 0:
        raise DomainError("d = 0 では球冠の高さは定義されません")
    return Interval.point(_cap_height_exact(p))


def _cap_height_exact(p: BallPair) -> Fraction:
    if p.d >= p.r1 + p.r2:
        return Fraction(0)
    if p.nested():
        return 2 * p.r1 if p.r1 <= p.r2 else Fraction(0)
    return (p.r1 + p.r2 - p.d) * (p.r2 - p.r1 + p.d) / (2 * p.d)


def cap_area_over_pi(p: BallPair) -> Fraction:
    if p.d >= p.r1 + p.r2:
        return Fraction(0)
    if p.nested():
        return 4 * p.r1**2 if p.r1 <= p.r2 else Fraction(0)
    return p.r1 / p.d * (p.r1 + p.r2 - p.d) * (p.r2 - p.r1 + p.d)


def lens_volume(p: BallPair, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """(π/12d)(r1+r2−d)²(d² + 2d(r1+r2) − 3(r1−r2)²)"""
    return enclose_pi(width) * lens_volume_over_pi(p)


def cap_area(p: BallPair, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """π(r1/d)(r1+r2−d)(r2−r1+d)"""
    return enclose_pi(width) * cap_area_over_pi(p)


def equal_ball_lens_ratio(radius: "Fraction | int | str", d: "Fraction | int | str") -> Fraction:
    """同半径の2球について |B₁ ∩ B₂| / |B|"""
    r = as_fraction(radius)
    return lens_volume_over_pi(BallPair(r, r, as_fraction(d))) / ball_volume_over_pi(r)
