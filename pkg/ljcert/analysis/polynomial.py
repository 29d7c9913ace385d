"""
有理係数1変数多項式

sympy.Poly（domain=QQ）を土台に、除算・最大公約多項式・Sturm 列・根の分離を
厳密な有理数演算で行う。係数は fractions.Fraction の昇順タプルでも保持し、
区間評価と点評価はこちらで行う。
"""

import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Protocol

from sympy import QQ, Poly, Rational, Symbol

from ljcert.analysis.interval import Interval, as_fraction
from ljcert.utils.errors import NotSquarefreeError, PolynomialError

logger = logging.getLogger(__name__)

X = Symbol("x")


def to_rational(value: "Fraction | int | str") -> Rational:
    f = as_fraction(value)
    return Rational(f.numerator, f.denominator)


def to_fraction(value: Any) -> Fraction:
    """sympy の有理数を Fraction に変換する。"""
    return Fraction(int(value.p), int(value.q))


def sympy_poly(coeffs: Sequence["Fraction | int"]) -> Poly:
    """昇順の係数列から sympy.Poly を作る。"""
    if not coeffs:
        return Poly(0, X, domain=QQ)
    return Poly([to_rational(c) for c in reversed(coeffs)], X, domain=QQ)


def fraction_coeffs(poly: Poly) -> tuple[Fraction, ...]:
    """sympy.Poly の係数を昇順の Fraction タプルにする（ゼロ多項式は空）。"""
    values = [to_fraction(c) for c in reversed(poly.all_coeffs())]
    while values and values[-1] == 0:
        values.pop()
    return tuple(values)


class Polynomial:
    """係数を次数の昇順に持つ有理係数多項式。ゼロ多項式は係数列が空。"""

    __slots__ = ("coeffs", "_poly")

    def __init__(self, coeffs: Iterable["Fraction | int | str"]):
        values = [as_fraction(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(values)
        self._poly: Poly = sympy_poly(self.coeffs)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "Polynomial":
        return cls(fraction_coeffs(poly))

    @property
    def sympy(self) -> Poly:
        return self._poly

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def constant(cls, value: "Fraction | int | str") -> "Polynomial":
        return cls([value])

    @classmethod
    def monomial(cls, degree: int, coefficient: "Fraction | int | str" = 1) -> "Polynomial":
        return cls([0] * degree + [coefficient])

    @classmethod
    def from_terms(cls, terms: dict[int, "Fraction | int | str"]) -> "Polynomial":
        """{次数: 係数} から構築する。"""
        if not terms:
            return cls([])
        values: list[Fraction | int | str] = [0] * (max(terms) + 1)
        for degree, c in terms.items():
            if degree < 0:
                raise PolynomialError(f"負の次数は指定できません: {degree}")
            values[degree] = c
        return cls(values)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if not self.coeffs:
            return Fraction(0)
        return self.coeffs[-1]

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        terms = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c != 0]
        return f"Polynomial({' + '.join(terms) or '0'})"

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return Polynomial.from_sympy(self._poly + _coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return Polynomial.from_sympy(self._poly - _coerce(other)._poly)

    def __rsub__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return _coerce(other) - self

    def __mul__(self, other: "Polynomial | Fraction | int") -> "Polynomial":
        return Polynomial.from_sympy(self._poly * _coerce(other)._poly)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise PolynomialError("多項式の負べきは定義されません")
        return Polynomial.from_sympy(self._poly**exponent)

    def __call__(self, x: "Fraction | int") -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_interval(self, x: Interval) -> Interval:
        """Horner 法による区間評価"""
        acc = Interval.point(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate_float(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial.from_sympy(self._poly.diff(X))

    def coefficient_signs(self) -> list[int]:
        return [(c > 0) - (c < 0) for c in self.coeffs]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            raise PolynomialError("ゼロ多項式はモニックにできません")
        return Polynomial.from_sympy(self._poly.monic())

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero():
            raise PolynomialError("ゼロ多項式で除算しました")
        quotient, remainder = self._poly.div(other._poly)
        return Polynomial.from_sympy(quotient), Polynomial.from_sympy(remainder)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def deflate(self, root: "Fraction | int") -> tuple["Polynomial", int]:
        """有理根 root の因子 (x - root) をすべて除き、商と重複度を返す。"""
        if self.is_zero():
            raise PolynomialError("ゼロ多項式は因数分解できません")
        factor = Polynomial([-as_fraction(root), 1])
        p = self
        multiplicity = 0
        while p(root) == 0:
            p = p // factor
            multiplicity += 1
        return p, multiplicity


def _coerce(value: "Polynomial | Fraction | int") -> Polynomial:
    if isinstance(value, Polynomial):
        return value
    return Polynomial.constant(value)


def polynomial_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """モニックな最大公約多項式（両方ゼロならゼロ多項式）"""
    if a.is_zero() and b.is_zero():
        return Polynomial([])
    return Polynomial.from_sympy(a.sympy.gcd(b.sympy)).monic()


# ----------------------------------------------------------------------
# Descartes / Sturm


class HasCoefficientSigns(Protocol):
    def coefficient_signs(self) -> list[int]: ...


def sign_changes(signs: Sequence[int]) -> int:
    nonzero = [s for s in signs if s != 0]
    return sum(1 for a, b in zip(nonzero, nonzero[1:]) if a != b)


def descartes_bound(p: HasCoefficientSigns) -> int:
    """係数列の符号変化数（正の実根の個数の上界、重複度込み）"""
    signs = p.coefficient_signs()
    if not any(signs):
        raise PolynomialError("ゼロ多項式に Descartes の符号法則は適用できません")
    return sign_changes(signs)


def sturm_chain(p: Polynomial) -> list[Polynomial]:
    """p の無平方部分から始まる Sturm 列（sympy.Poly.sturm）"""
    if p.is_zero():
        raise PolynomialError("ゼロ多項式の Sturm 列は定義されません")
    return [Polynomial.from_sympy(q) for q in p.sympy.sturm()]


def _variations(chain: Sequence[Polynomial], x: Fraction) -> int:
    return sign_changes([(v > 0) - (v < 0) for v in (q(x) for q in chain)])


def sturm_count(p: Polynomial, a: "Fraction | int | str", b: "Fraction | int | str") -> int:
    """(a, b] に含まれる相異なる実根の個数

    端点が根のときは (x - 端点) を厳密に除いてから数える。
    """
    lo, hi = as_fraction(a), as_fraction(b)
    if p.is_zero():
        raise PolynomialError("ゼロ多項式の根は数えられません")
    if lo >= hi:
        raise PolynomialError(f"区間が空です: ({lo}, {hi}]")
    extra = 0
    if p(lo) == 0:
        p, _ = p.deflate(lo)
    if p(hi) == 0:
        p, _ = p.deflate(hi)
        extra = 1
    if p.degree <= 0:
        return extra
    chain = sturm_chain(p)
    return _variations(chain, lo) - _variations(chain, hi) + extra


def cauchy_bound(p: Polynomial) -> Fraction:
    """全実根の絶対値の上界 1 + max|a_k / a_n|"""
    if p.is_zero():
        raise PolynomialError("ゼロ多項式の根の上界は定義されません")
    lead = abs(p.leading)
    return 1 + max((abs(c) / lead for c in p.coeffs[:-1]), default=Fraction(0))


# ----------------------------------------------------------------------
# 根の分離


@dataclass(frozen=True)
class RootEnclosure:
    interval: Interval
    multiplicity: int = 1

    @property
    def midpoint(self) -> float:
        return float(self.interval.mid)


def _clip(p: Polynomial, lo: Fraction, hi: Fraction, domain: Interval) -> Interval | None:
    a, b = max(lo, domain.lo), min(hi, domain.hi)
    if a > b:
        return None
    if (a, b) != (lo, hi) and int(p.sympy.count_roots(to_rational(a), to_rational(b))) == 0:
        return None
    return Interval(a, b)


def isolate_roots(p: Polynomial, domain: Interval, width: "Fraction | int | str") -> list[RootEnclosure]:
    """domain 内の全実根を幅 width 以下の互いに素な区間で分離する。"""
    w = as_fraction(width)
    if w <= 0:
        raise PolynomialError(f"分離幅は正でなければなりません: {w}")
    if p.is_zero():
        raise PolynomialError("ゼロ多項式の根は分離できません")
    g = polynomial_gcd(p, p.derivative())
    if g.degree > 0:
        raise NotSquarefreeError(f"無平方でない多項式です（gcd の次数 {g.degree}）", g)
    if p.degree <= 0:
        return []

    raw = p.sympy.intervals(eps=to_rational(w), inf=to_rational(domain.lo), sup=to_rational(domain.hi))
    found: list[RootEnclosure] = []
    for (s, t), multiplicity in raw:
        clipped = _clip(p, to_fraction(s), to_fraction(t), domain)
        if clipped is None:
            continue
        enclosure = RootEnclosure(clipped, int(multiplicity))
        if clipped.width > w:
            enclosure = refine_root(p, enclosure, w)
        found.append(enclosure)
    found.sort(key=lambda e: (e.interval.lo, e.interval.hi))
    logger.debug(f"根の分離: {len(found)} 個 (domain={domain}, width={w})")
    return found


def refine_root(p: Polynomial, enclosure: RootEnclosure, width: "Fraction | int | str") -> RootEnclosure:
    """分離区間を幅 width 以下に縮める（sympy.Poly.refine_root）。"""
    w = as_fraction(width)
    a, b = enclosure.interval.lo, enclosure.interval.hi
    if a == b or b - a <= w:
        return enclosure
    for endpoint in (a, b):
        if p(endpoint) == 0:
            return RootEnclosure(Interval.point(endpoint), enclosure.multiplicity)
    if a < 0 < b:
        # 0 をまたぐ区間は符号変化のある側に寄せる
        if p(0) == 0:
            return RootEnclosure(Interval.point(0), enclosure.multiplicity)
        if (p(a) > 0) != (p(0) > 0):
            b = Fraction(0)
        else:
            a = Fraction(0)
    s, t = p.sympy.refine_root(to_rational(a), to_rational(b), eps=to_rational(w))
    return RootEnclosure(Interval(to_fraction(s), to_fraction(t)), enclosure.multiplicity)
