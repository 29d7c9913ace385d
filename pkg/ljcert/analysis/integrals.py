"""
θ のモーメント積分と球殻重み付き積分

閉形式の原始関数を ℚ(s) 上で厳密に組み立て、最後に区間へ変換する。
無限区間の裾は原始関数の極限（h 区分では ∞ で 0）で処理する。
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from scipy import integrate

from ljcert.analysis.interval import Interval, as_fraction, enclose_s
from ljcert.analysis.number_field import A, S, NumberFieldElem, compare
from ljcert.analysis.potential import H_PIECE, T_OFFSET, T_PIECE, LaurentPiece, THETA, eval_profile_float, theta_trunc
from ljcert.constants.numerics import DEFAULT_ENCLOSURE_WIDTH, QUADRATURE_LIMIT
from ljcert.utils.errors import DomainError

logger = logging.getLogger(__name__)


def _t_moment_primitive(w: NumberFieldElem) -> NumberFieldElem:
    """∫ t(w) w² dw = A w²/2 − (25/33) w³"""
    return A * w * w * Fraction(1, 2) - T_OFFSET / 3 * w**3


def _h_moment_primitive(w: NumberFieldElem) -> NumberFieldElem:
    """∫ h(w) w² dw = w⁻⁹/9 − (2/3) w⁻³（∞ で 0）"""
    return w ** (-9) * Fraction(1, 9) - w ** (-3) * Fraction(2, 3)


@dataclass(frozen=True)
class MomentIntegral:
    lower: Fraction
    exact: NumberFieldElem
    value: Interval


def theta_moment_exact(lower: "Fraction | int | str") -> NumberFieldElem:
    """∫_lower^∞ θ(w) w² dw の厳密値（ℚ(s) の元）"""
    a = as_fraction(lower)
    if a < 0:
        raise DomainError(f"下端は非負でなければなりません: {a}")
    at = NumberFieldElem.from_rational(a)
    if compare(at, S) < 0:
        return _t_moment_primitive(S) - _t_moment_primitive(at) - _h_moment_primitive(S)
    return -_h_moment_primitive(at)


def theta_moment(lower: "Fraction | int | str", width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """∫_lower^∞ θ(w) w² dw の包含区間"""
    return theta_moment_exact(lower).to_interval(width)


def moment_integral(lower: "Fraction | int | str", width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> MomentIntegral:
    exact = theta_moment_exact(lower)
    return MomentIntegral(as_fraction(lower), exact, exact.to_interval(width))


# ----------------------------------------------------------------------
# 球殻重み付き積分


@dataclass(frozen=True)
class ShellQuadratic:
    """const + r·r1 + r²·r2 + c²·c2 の形の厳密係数（係数は ℚ(s) の元）"""

    const: NumberFieldElem
    r1: NumberFieldElem
    r2: NumberFieldElem
    c2: NumberFieldElem

    def evaluate(self, r: Interval, c: "Fraction | int | str", width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
        cc = as_fraction(c) ** 2
        return (
            self.const.to_interval(width)
            + self.r1.to_interval(width) * r
            + self.r2.to_interval(width) * r**2
            + self.c2.to_interval(width) * cc
        )

    def at_radius(self, c: "Fraction | int | str") -> tuple[NumberFieldElem, NumberFieldElem, NumberFieldElem]:
        """c を固定したときの r の2次式 (定数, 1次, 2次) の係数"""
        cc = as_fraction(c) ** 2
        return self.const + self.c2 * cc, self.r1, self.r2


@dataclass(frozen=True)
class ShellIntegral:
    r: Interval
    c: Fraction
    w1: Fraction
    w2: Fraction
    value: Interval


def shell_quadratic(w1: "Fraction | int | str", w2: "Fraction | int | str", offset: Fraction = T_OFFSET) -> ShellQuadratic:
    """A(α(w2)−α(w1)) − offset·(β(w2)−β(w1)) を r, c² の式として厳密に展開する。

    α(w) = −w³/3 + r w² + (c²−r²) w
    β(w) = −w⁴/4 + (2/3) r w³ + (1/2)(c²−r²) w²
    """
    a, b = as_fraction(w1), as_fraction(w2)
    if not 0 < a < b:
        raise DomainError(f"0 < w1 < w2 が必要です: w1={a}, w2={b}")

    def delta(f) -> Fraction:  # type: ignore[no-untyped-def]
        return f(b) - f(a)

    alpha_const = delta(lambda w: -(w**3) / 3)
    alpha_r = delta(lambda w: w**2)
    alpha_c2 = delta(lambda w: w)
    beta_const = delta(lambda w: -(w**4) / 4)
    beta_r = delta(lambda w: Fraction(2, 3) * w**3)
    beta_c2 = delta(lambda w: w**2 / 2)
    return ShellQuadratic(
        const=A * alpha_const - NumberFieldElem.from_rational(offset * beta_const),
        r1=A * alpha_r - NumberFieldElem.from_rational(offset * beta_r),
        r2=-(A * alpha_c2) + NumberFieldElem.from_rational(offset * beta_c2),
        c2=A * alpha_c2 - NumberFieldElem.from_rational(offset * beta_c2),
    )


def shell_weighted_integral(
    r: Interval,
    c: "Fraction | int | str",
    w1: "Fraction | int | str",
    w2: "Fraction | int | str",
    width: Fraction = DEFAULT_ENCLOSURE_WIDTH,
) -> Interval:
    """∫_{w1}^{w2} (A w⁻¹ − 25/11)·w·(−w² + 2rw + c² − r²) dw の包含区間"""
    return shell_quadratic(w1, w2).evaluate(r, c, width)


def shell_integral(
    r: Interval,
    c: "Fraction | int | str",
    w1: "Fraction | int | str",
    w2: "Fraction | int | str",
    width: Fraction = DEFAULT_ENCLOSURE_WIDTH,
) -> ShellIntegral:
    return ShellIntegral(r, as_fraction(c), as_fraction(w1), as_fraction(w2), shell_weighted_integral(r, c, w1, w2, width))


# ----------------------------------------------------------------------
# 球平均の下界


def _weighted_piece_integral(
    piece: LaurentPiece, r: Interval, c: Fraction, a: Fraction, b: Fraction, width: Fraction
) -> Interval:
    """∫_a^b piece(w)·w·(c² − (r − w)²) dw。w⁻¹ 項は現れない（h, t 区分のみ）。"""
    if a >= b:
        return Interval.point(0)
    weight = {2: Interval.point(-1), 1: 2 * r, 0: c * c - r**2}
    terms: dict[int, Interval] = {}
    for k, coeff in piece.terms:
        ci = coeff.to_interval(width)
        for j, wj in weight.items():
            power = k + 1 + j
            terms[power] = terms.get(power, Interval.point(0)) + ci * wj
    total = Interval.point(0)
    for power, coeff in sorted(terms.items()):
        if power == -1:
            raise DomainError("対数項を含む積分は扱いません")
        n = power + 1
        total = total + coeff * (Fraction(b) ** n - Fraction(a) ** n) / n
    return total


def ball_average_lower_bound(
    x_norm: Interval,
    ball_radius: "Fraction | int | str",
    trunc: "Fraction | int | str",
    width: Fraction = DEFAULT_ENCLOSURE_WIDTH,
) -> Interval:
    """半径 ball_radius の球 B_x 上での θ^trunc の平均の下界（区間）

    |S_w ∩ B_x| = (π w / r)(c² − (r − w)²) を用い、r の区間全体で重みが非負な
    範囲 [max(r.hi − c, trunc), r.lo + c] だけを積分する。θ ≥ t は (0,∞) 全体で
    成り立つので s の包含区間の上端までは t 区分、それ以降は h 区分を使う。
    返り値の下端が平均の下界。
    """
    c = as_fraction(ball_radius)
    cut = as_fraction(trunc)
    if c <= 0:
        raise DomainError(f"球の半径は正でなければなりません: {c}")
    if x_norm.lo <= c:
        raise DomainError(f"球が原点を含むため球殻分解が使えません: ‖x‖ ≥ {x_norm.lo}, 半径 {c}")
    a = max(x_norm.hi - c, cut)
    b = x_norm.lo + c
    s_enc = enclose_s(width)
    t_part = _weighted_piece_integral(T_PIECE, x_norm, c, a, min(b, s_enc.hi), width)
    h_part = _weighted_piece_integral(H_PIECE, x_norm, c, max(a, s_enc.hi), b, width)
    integral = t_part + h_part
    # (π/r)·∫ を (4/3)π c³ で割る
    return integral * Fraction(3, 4) / (c**3) / x_norm


# ----------------------------------------------------------------------
# 数値積分（照合用、証明には使わない）


def quadrature_theta_moment(lower: float) -> tuple[float, float]:
    """scipy.integrate.quad による ∫_lower^∞ θ(w) w² dw と誤差推定"""
    s = float(S)
    total, error = 0.0, 0.0
    if lower < s:
        v, e = integrate.quad(lambda w: float(eval_profile_float(THETA, w)) * w * w, lower, s, limit=QUADRATURE_LIMIT)
        total, error = total + v, error + e
    v, e = integrate.quad(lambda w: float(eval_profile_float(THETA, w)) * w * w, max(lower, s), math.inf, limit=QUADRATURE_LIMIT)
    return total + v, error + e


def quadrature_ball_average(x_norm: float, ball_radius: float, trunc: float = 0.0) -> tuple[float, float]:
    """θ^trunc の球平均を球殻分解 + scipy.integrate.quad で計算する（値, 誤差推定）"""
    r, c = float(x_norm), float(ball_radius)
    if r <= c:
        raise DomainError(f"球が原点を含みます: ‖x‖={r}, 半径={c}")
    profile = theta_trunc(Fraction(trunc).limit_denominator(10**9)) if trunc > 0 else THETA

    def integrand(w: float) -> float:
        return float(eval_profile_float(profile, w)) * math.pi * w / r * (c * c - (r - w) ** 2)

    lo, hi = r - c, r + c
    points = [p for p in (trunc, float(S)) if lo < p < hi]
    value, error = integrate.quad(integrand, lo, hi, points=points or None, limit=QUADRATURE_LIMIT)
    volume = 4.0 / 3.0 * math.pi * c**3
    return value / volume, error / volume
