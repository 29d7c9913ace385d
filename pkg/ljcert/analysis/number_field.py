"""
数体 ℚ(s), s⁶ = 11/5 の厳密演算

要素は c₀ + c₁s + … + c₅s⁵ の6個の有理係数で表す。積の簡約と逆元は
sympy.Poly の rem / invert で x⁶ − 11/5 を法として計算する。x⁶ − 11/5 は既約なので
係数がすべて 0 のときに限り値が 0 になり、符号は区間像の精緻化で必ず決まる。
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from sympy import Poly

from ljcert.analysis.interval import A_FACTOR, S_SIXTH_POWER, Interval, as_fraction, enclose_s
from ljcert.analysis.polynomial import Polynomial, fraction_coeffs, sympy_poly
from ljcert.constants.numerics import DEFAULT_ENCLOSURE_WIDTH
from ljcert.utils.errors import DomainError, IntervalDivisionError

logger = logging.getLogger(__name__)

DEGREE = 6
_SIGN_MAX_REFINEMENTS = 12

Scalar = Union[Fraction, int]

# s の最小多項式 x⁶ − 11/5
_MODULUS = sympy_poly([-S_SIXTH_POWER, 0, 0, 0, 0, 0, 1])


@dataclass(frozen=True, slots=True)
class NumberFieldElem:
    coeffs: tuple[Fraction, Fraction, Fraction, Fraction, Fraction, Fraction]

    def __post_init__(self) -> None:
        values = tuple(as_fraction(c) for c in self.coeffs)
        if len(values) != DEGREE:
            raise DomainError(f"ℚ(s) の要素は係数 {DEGREE} 個で表します: {len(values)} 個")
        object.__setattr__(self, "coeffs", values)

    @classmethod
    def from_rational(cls, value: "Fraction | int | str") -> "NumberFieldElem":
        return cls((as_fraction(value),) + (Fraction(0),) * (DEGREE - 1))

    @classmethod
    def from_sympy(cls, poly: Poly) -> "NumberFieldElem":
        """x の多項式を x⁶ − 11/5 で割った余りとして読む。"""
        values = fraction_coeffs(poly.rem(_MODULUS))
        return cls(values + (Fraction(0),) * (DEGREE - len(values)))  # type: ignore[arg-type]

    def as_sympy(self) -> Poly:
        return sympy_poly(self.coeffs)

    @classmethod
    def zero(cls) -> "NumberFieldElem":
        return cls.from_rational(0)

    @classmethod
    def one(cls) -> "NumberFieldElem":
        return cls.from_rational(1)

    @classmethod
    def generator(cls) -> "NumberFieldElem":
        """s そのもの"""
        return cls.s_power(1)

    @classmethod
    def s_power(cls, k: int) -> "NumberFieldElem":
        """s^k（負の k も可）。s^(6m+j) = (11/5)^m s^j で簡約する。"""
        m, j = divmod(k, DEGREE)
        coeffs = [Fraction(0)] * DEGREE
        coeffs[j] = S_SIXTH_POWER**m
        return cls(tuple(coeffs))  # type: ignore[arg-type]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    @property
    def rational_part(self) -> Fraction:
        return self.coeffs[0]

    def __neg__(self) -> "NumberFieldElem":
        return NumberFieldElem(tuple(-c for c in self.coeffs))  # type: ignore[arg-type]

    def __add__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        o = _coerce(other)
        return NumberFieldElem(tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))  # type: ignore[arg-type]

    __radd__ = __add__

    def __sub__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        return self + (-_coerce(other))

    def __rsub__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        return _coerce(other) - self

    def __mul__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        if isinstance(other, (int, Fraction)):
            return NumberFieldElem(tuple(c * other for c in self.coeffs))  # type: ignore[arg-type]
        return NumberFieldElem.from_sympy(self.as_sympy() * other.as_sympy())

    __rmul__ = __mul__

    def inverse(self) -> "NumberFieldElem":
        """乗法逆元（x⁶ − 11/5 を法とする多項式の逆元）"""
        if self.is_zero():
            raise IntervalDivisionError("ℚ(s) のゼロ元で除算しました")
        if self.is_rational():
            return NumberFieldElem.from_rational(1 / self.coeffs[0])
        return NumberFieldElem.from_sympy(self.as_sympy().invert(_MODULUS))

    def __truediv__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise IntervalDivisionError("0 で除算しました")
            return self * (1 / Fraction(other))
        return self * other.inverse()

    def __rtruediv__(self, other: "NumberFieldElem | Scalar") -> "NumberFieldElem":
        return _coerce(other) * self.inverse()

    def __pow__(self, exponent: int) -> "NumberFieldElem":
        base = self if exponent >= 0 else self.inverse()
        result = NumberFieldElem.one()
        for _ in range(abs(exponent)):
            result = result * base
        return result

    def to_interval(self, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
        """値の包含区間。s の包含幅 width から評価する。"""
        return _to_interval(self, width)

    def sign(self) -> int:
        """厳密な符号。ゼロ判定は係数で、非ゼロなら区間を細かくして決める。"""
        if self.is_zero():
            return 0
        if self.is_rational():
            c = self.coeffs[0]
            return (c > 0) - (c < 0)
        width = Fraction(1, 10**12)
        for _ in range(_SIGN_MAX_REFINEMENTS):
            enc = self.to_interval(width)
            if enc.is_positive():
                return 1
            if enc.is_negative():
                return -1
            width = width**2
        raise ArithmeticError(f"ℚ(s) の要素の符号が決まりません: {self.coeffs}")

    def __float__(self) -> float:
        return float(self.to_interval(Fraction(1, 10**30)).mid)

    def __repr__(self) -> str:
        terms = [f"{c}*s^{k}" if k else f"{c}" for k, c in enumerate(self.coeffs) if c != 0]
        return f"NumberFieldElem({' + '.join(terms) or '0'})"


def _coerce(value: "NumberFieldElem | Scalar") -> NumberFieldElem:
    if isinstance(value, NumberFieldElem):
        return value
    return NumberFieldElem.from_rational(value)


@lru_cache(maxsize=4096)
def _to_interval(elem: NumberFieldElem, width: Fraction) -> Interval:
    s_enc = enclose_s(width / 64)
    acc = Interval.point(0)
    for c in reversed(elem.coeffs):
        acc = acc * s_enc + c
    return acc


def compare(x: "NumberFieldElem | Fraction | int", y: "NumberFieldElem | Fraction | int") -> int:
    """x と y の大小を厳密に比較し -1, 0, 1 を返す。"""
    return (_coerce(x) - _coerce(y)).sign()


# s と A は証明全体で使う
S = NumberFieldElem.generator()
A = S * A_FACTOR


# ----------------------------------------------------------------------
# ℚ(s) 係数の多項式


class NFPolynomial:
    """ℚ(s) 係数の1変数多項式（係数は次数の昇順）"""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable["NumberFieldElem | Scalar"]):
        values = [_coerce(c) for c in coeffs]
        while values and values[-1].is_zero():
            values.pop()
        self.coeffs: tuple[NumberFieldElem, ...] = tuple(values)

    @classmethod
    def from_terms(cls, terms: dict[int, "NumberFieldElem | Scalar"]) -> "NFPolynomial":
        if not terms:
            return cls([])
        values: list[NumberFieldElem | Scalar] = [0] * (max(terms) + 1)
        for degree, c in terms.items():
            values[degree] = c
        return cls(values)

    @classmethod
    def from_rational(cls, p: Polynomial) -> "NFPolynomial":
        return cls(p.coeffs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NFPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def derivative(self) -> "NFPolynomial":
        return NFPolynomial(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def __call__(self, x: "NumberFieldElem | Scalar") -> NumberFieldElem:
        at = _coerce(x)
        acc = NumberFieldElem.zero()
        for c in reversed(self.coeffs):
            acc = acc * at + c
        return acc

    def evaluate_interval(self, x: Interval, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
        acc = Interval.point(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c.to_interval(width)
        return acc

    def coefficient_signs(self) -> list[int]:
        return [c.sign() for c in self.coeffs]


def nf_eval(p: "Polynomial | NFPolynomial | Sequence[Scalar]") -> NumberFieldElem:
    """多項式を x = s で厳密に評価し、s⁶ = 11/5 で簡約した値を返す。"""
    if isinstance(p, NFPolynomial):
        return p(S)
    poly = p if isinstance(p, Polynomial) else Polynomial(p)
    acc = NumberFieldElem.zero()
    for k, c in enumerate(poly.coeffs):
        if c != 0:
            acc = acc + NumberFieldElem.s_power(k) * c
    return acc
