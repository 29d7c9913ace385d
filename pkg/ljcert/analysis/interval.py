"""
区間演算と定数の包含区間

端点はすべて fractions.Fraction で保持し、演算結果は厳密像を必ず含む。
π・s = (11/5)^(1/6)・A = (360/121)s は要求幅の包含区間としてのみ扱う。
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal, Union

import mpmath

from ljcert.constants.numerics import DEFAULT_ENCLOSURE_WIDTH
from ljcert.utils.errors import DomainError, IntervalDivisionError

logger = logging.getLogger(__name__)

Number = Union[Fraction, int]
IntervalOp = Literal["add", "sub", "mul", "div", "int_pow"]

S_SIXTH_POWER = Fraction(11, 5)
A_FACTOR = Fraction(360, 121)


def as_fraction(value: "Fraction | int | float | str") -> Fraction:
    """数値を Fraction に変換する。float は2進表現をそのまま厳密値として扱う。"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float) and not math.isfinite(value):
        raise DomainError(f"有限でない値は扱えません: {value!r}")
    return Fraction(value)


@dataclass(frozen=True, slots=True)
class Interval:
    """有理数端点の閉区間 [lo, hi]"""

    lo: Fraction
    hi: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise DomainError(f"区間の端点が逆転しています: [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, value: "Fraction | int | str") -> "Interval":
        x = as_fraction(value)
        return cls(x, x)

    @classmethod
    def hull(cls, *items: "Interval") -> "Interval":
        if not items:
            raise DomainError("空の区間列の凸包は定義されません")
        return cls(min(i.lo for i in items), max(i.hi for i in items))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, value: "Fraction | int | Interval") -> bool:
        if isinstance(value, Interval):
            return self.lo <= value.lo and value.hi <= self.hi
        return self.lo <= value <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def split(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def intersect(self, other: "Interval") -> "Interval | None":
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def round_out(self, denominator: int) -> "Interval":
        """分母 denominator の格子へ外向きに丸める（出力用に桁数を抑える）。"""
        lo = Fraction(math.floor(self.lo * denominator), denominator)
        hi = Fraction(math.ceil(self.hi * denominator), denominator)
        return Interval(lo, hi)

    def __float__(self) -> float:
        return float(self.mid)

    # ------------------------------------------------------------------
    # 算術演算（Fraction / int は退化区間として扱う）

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __add__(self, other: "Interval | Number") -> "Interval":
        o = _coerce(other)
        return Interval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __sub__(self, other: "Interval | Number") -> "Interval":
        o = _coerce(other)
        return Interval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other: "Interval | Number") -> "Interval":
        return _coerce(other) - self

    def __mul__(self, other: "Interval | Number") -> "Interval":
        o = _coerce(other)
        products = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return Interval(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "Interval":
        if self.contains_zero():
            raise IntervalDivisionError(f"0 を含む区間で除算しました: [{self.lo}, {self.hi}]")
        return Interval(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other: "Interval | Number") -> "Interval":
        return self * _coerce(other).reciprocal()

    def __rtruediv__(self, other: "Interval | Number") -> "Interval":
        return _coerce(other) * self.reciprocal()

    def __pow__(self, exponent: int) -> "Interval":
        if not isinstance(exponent, int):
            raise DomainError(f"区間のべき乗は整数指数のみ対応します: {exponent!r}")
        if exponent < 0:
            return (self ** (-exponent)).reciprocal()
        if exponent == 0:
            return Interval.point(1)
        lo_p = self.lo**exponent
        hi_p = self.hi**exponent
        if exponent % 2 == 1 or self.lo >= 0:
            return Interval(min(lo_p, hi_p), max(lo_p, hi_p))
        if self.hi <= 0:
            return Interval(hi_p, lo_p)
        return Interval(Fraction(0), max(lo_p, hi_p))


def _coerce(value: "Interval | Number") -> Interval:
    if isinstance(value, Interval):
        return value
    return Interval.point(value)


def interval_arith(a: Interval, b: "Interval | int", op: IntervalOp) -> Interval:
    """二項区間演算。int_pow の指数は int か整数一点の区間。"""
    if op == "add":
        return a + _coerce(b)
    if op == "sub":
        return a - _coerce(b)
    if op == "mul":
        return a * _coerce(b)
    if op == "div":
        return a / _coerce(b)
    if op == "int_pow":
        if isinstance(b, Interval):
            if b.lo != b.hi or b.lo.denominator != 1:
                raise DomainError(f"指数は整数でなければなりません: [{b.lo}, {b.hi}]")
            return a ** int(b.lo)
        return a**b
    raise DomainError(f"未知の区間演算です: {op!r}")


# ----------------------------------------------------------------------
# 定数の包含区間


def _bits_for(width: Fraction) -> int:
    if width <= 0:
        raise DomainError(f"包含幅は正でなければなりません: {width}")
    return math.ceil(1 / width).bit_length() + 10


@lru_cache(maxsize=32)
def enclose_pi(width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """幅 width 以下の π の包含区間"""
    bits = _bits_for(width)
    with mpmath.workprec(bits):
        man, exp = (+mpmath.pi).man_exp
    centre = Fraction(int(man)) * Fraction(2) ** int(exp)
    radius = Fraction(1, 2 ** (bits - 4))
    return Interval(centre - radius, centre + radius)


@lru_cache(maxsize=64)
def enclose_sixth_root(value: Fraction, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """正の有理数の6乗根を二分法で包む。"""
    if value <= 0:
        raise DomainError(f"6乗根は正の値に対してのみ計算します: {value}")
    lo, hi = Fraction(0), max(Fraction(1), value)
    steps = 0
    while hi - lo > width:
        mid = (lo + hi) / 2
        if mid**6 < value:
            lo = mid
        else:
            hi = mid
        steps += 1
    logger.debug(f"6乗根 ({value}) の二分法: {steps} 回")
    return Interval(lo, hi)


def enclose_s(width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """s = (11/5)^(1/6) の包含区間"""
    return enclose_sixth_root(S_SIXTH_POWER, width)


def enclose_A(width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """A = (360/121)·s の包含区間"""
    return A_FACTOR * enclose_s(width / 3)


def enclose_h_root(width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """h の零点 2^(-1/6) の包含区間"""
    return enclose_sixth_root(Fraction(1, 2), width)
