"""
Lennard-Jones のマイナスエネルギー h と関連する動径関数

h(r) = −r⁻¹² + 2r⁻⁶ （Φ(x) = −h(‖x‖)）
h̃    = 1 on (0,1], h on (1,∞)
t(r) = A r⁻¹ − 25/11
θ    = t on (0,s], h on (s,∞)
θ^c  = 0 on (0,c], θ on (c,∞)

各区分は ℚ(s) 係数の Laurent 多項式で、折れ点は厳密値で持つ。区分は左開右閉。
"""

import logging
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Literal

import numpy as np
import numpy.typing as npt

from ljcert.analysis.interval import Interval, as_fraction, enclose_h_root
from ljcert.analysis.number_field import A, S, NumberFieldElem, compare
from ljcert.constants.numerics import DEFAULT_ENCLOSURE_WIDTH
from ljcert.utils.errors import BreakpointError, DomainError

logger = logging.getLogger(__name__)

Side = Literal["left", "right"]
T_OFFSET = Fraction(25, 11)


@dataclass(frozen=True)
class LaurentPiece:
    """Σ coeff·r^k （k は負も可）"""

    terms: tuple[tuple[int, NumberFieldElem], ...]

    @classmethod
    def of(cls, terms: Mapping[int, "NumberFieldElem | Fraction | int"]) -> "LaurentPiece":
        items = []
        for k in sorted(terms):
            c = terms[k]
            elem = c if isinstance(c, NumberFieldElem) else NumberFieldElem.from_rational(c)
            if not elem.is_zero():
                items.append((k, elem))
        return cls(tuple(items))

    def is_zero(self) -> bool:
        return not self.terms

    def as_dict(self) -> dict[int, NumberFieldElem]:
        return dict(self.terms)

    def __add__(self, other: "LaurentPiece") -> "LaurentPiece":
        merged = self.as_dict()
        for k, c in other.terms:
            merged[k] = merged[k] + c if k in merged else c
        return LaurentPiece.of(merged)

    def __neg__(self) -> "LaurentPiece":
        return LaurentPiece(tuple((k, -c) for k, c in self.terms))

    def __sub__(self, other: "LaurentPiece") -> "LaurentPiece":
        return self + (-other)

    def scale(self, factor: "NumberFieldElem | Fraction | int") -> "LaurentPiece":
        return LaurentPiece.of({k: c * factor for k, c in self.terms})

    def shift(self, power: int) -> "LaurentPiece":
        """r^power を掛ける。"""
        return LaurentPiece(tuple((k + power, c) for k, c in self.terms))

    def derivative(self, order: int = 1) -> "LaurentPiece":
        piece = self
        for _ in range(order):
            piece = LaurentPiece.of({k - 1: c * k for k, c in piece.terms if k != 0})
        return piece

    def laplacian(self) -> "LaurentPiece":
        """x ↦ f(‖x‖) の3次元ラプラシアン。r^k ↦ k(k+1) r^(k−2)"""
        return LaurentPiece.of({k - 2: c * (k * (k + 1)) for k, c in self.terms if k * (k + 1) != 0})

    def evaluate_exact(self, r: "NumberFieldElem | Fraction | int") -> NumberFieldElem:
        at = r if isinstance(r, NumberFieldElem) else NumberFieldElem.from_rational(r)
        if at.is_zero():
            raise DomainError("r = 0 では評価できません")
        acc = NumberFieldElem.zero()
        for k, c in self.terms:
            acc = acc + c * at**k
        return acc

    def evaluate_interval(self, r: Interval, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
        if r.lo <= 0 and any(k < 0 for k, _ in self.terms):
            raise DomainError(f"r は正でなければなりません: [{r.lo}, {r.hi}]")
        acc = Interval.point(0)
        for k, c in self.terms:
            acc = acc + c.to_interval(width) * r**k
        return acc

    def evaluate_float(self, r: "float | npt.NDArray[np.float64]") -> "float | npt.NDArray[np.float64]":
        acc: float | npt.NDArray[np.float64] = 0.0
        for k, c in self.terms:
            acc = acc + float(c) * np.power(r, float(k))
        return acc


H_PIECE = LaurentPiece.of({-12: -1, -6: 2})
T_PIECE = LaurentPiece.of({-1: A, 0: -T_OFFSET})
ONE_PIECE = LaurentPiece.of({0: 1})
ZERO_PIECE = LaurentPiece.of({})


def t_piece(offset: Fraction = T_OFFSET) -> LaurentPiece:
    """t(r) = A r⁻¹ − offset。offset を変えた変種は変異テストで使う。"""
    return LaurentPiece.of({-1: A, 0: -offset})


@dataclass(frozen=True)
class RadialProfile:
    """区分 Laurent 多項式で表した動径関数。pieces[i] は (bp[i−1], bp[i]] 上。"""

    name: str
    breakpoints: tuple[NumberFieldElem, ...]
    pieces: tuple[LaurentPiece, ...]

    def __post_init__(self) -> None:
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise DomainError(f"{self.name}: 区分の数は折れ点の数 + 1")

    def piece_index_exact(self, r: "NumberFieldElem | Fraction | int", side: Side | None = None) -> int:
        for i, bp in enumerate(self.breakpoints):
            c = compare(r, bp)
            if c < 0 or (c == 0 and side != "right"):
                return i
        return len(self.breakpoints)

    def pieces_on(self, r: Interval, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> list[tuple[int, Interval]]:
        """r と交わる各区分と、その区分を評価すべき部分区間（折れ点の包含区間分だけ広げる）"""
        result: list[tuple[int, Interval]] = []
        lo = r.lo
        for i, bp in enumerate(self.breakpoints):
            if compare(lo, bp) > 0:
                continue
            if compare(r.hi, bp) <= 0:
                result.append((i, Interval(lo, r.hi)))
                return result
            bp_enc = bp.to_interval(width)
            result.append((i, Interval(lo, max(bp_enc.hi, lo))))
            lo = max(bp_enc.lo, r.lo)
        result.append((len(self.breakpoints), Interval(lo, r.hi)))
        return result


def _bp(value: "NumberFieldElem | Fraction | int | str") -> NumberFieldElem:
    if isinstance(value, NumberFieldElem):
        return value
    return NumberFieldElem.from_rational(as_fraction(value))


H = RadialProfile("h", (), (H_PIECE,))
H_TILDE = RadialProfile("h_tilde", (_bp(1),), (ONE_PIECE, H_PIECE))
T = RadialProfile("t", (), (T_PIECE,))
THETA = RadialProfile("theta", (S,), (T_PIECE, H_PIECE))


@lru_cache(maxsize=32)
def theta_trunc(c: "Fraction | str") -> RadialProfile:
    """θ^c: (0, c] で 0、それ以降は θ"""
    cut = as_fraction(c)
    if cut <= 0:
        return THETA
    if compare(cut, S) < 0:
        return RadialProfile(f"theta_trunc({cut})", (_bp(cut), S), (ZERO_PIECE, T_PIECE, H_PIECE))
    return RadialProfile(f"theta_trunc({cut})", (_bp(cut),), (ZERO_PIECE, H_PIECE))


PROFILES: dict[str, RadialProfile] = {p.name: p for p in (H, H_TILDE, T, THETA)}


# ----------------------------------------------------------------------
# 評価


def eval_profile(profile: RadialProfile, r: Interval, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """区間 r 上の像の包含区間。折れ点をまたぐ場合は各区分の像の凸包。"""
    if r.lo <= 0:
        raise DomainError(f"r は正でなければなりません: [{r.lo}, {r.hi}]")
    images = [profile.pieces[i].evaluate_interval(sub, width) for i, sub in profile.pieces_on(r, width)]
    return Interval.hull(*images)


def eval_profile_exact(profile: RadialProfile, r: "NumberFieldElem | Fraction | int") -> NumberFieldElem:
    if compare(r, 0) <= 0:
        raise DomainError("r は正でなければなりません")
    return profile.pieces[profile.piece_index_exact(r)].evaluate_exact(r)


def eval_profile_float(
    profile: RadialProfile, r: "float | npt.NDArray[np.float64]"
) -> "float | npt.NDArray[np.float64]":
    """浮動小数点での評価（クラスタ計算・数値積分用）"""
    values = np.asarray(r, dtype=float)
    if np.any(values <= 0):
        raise DomainError("r は正でなければなりません")
    bounds = [float(bp) for bp in profile.breakpoints]
    index = np.searchsorted(bounds, values, side="left")
    out = np.zeros_like(values)
    for i, piece in enumerate(profile.pieces):
        mask = index == i
        if np.any(mask):
            out[mask] = piece.evaluate_float(values[mask])
    if np.ndim(r) == 0:
        return float(out)
    return out


def _select_piece(profile: RadialProfile, r: Interval, side: Side | None, width: Fraction) -> int:
    touching = [i for i, _ in profile.pieces_on(r, width)]
    # 区間の端が折れ点にちょうど一致する場合も「またぐ」と扱う
    for i, bp in enumerate(profile.breakpoints):
        if compare(r.lo, bp) == 0 and i + 1 not in touching:
            touching.append(i + 1)
        if compare(r.hi, bp) == 0 and i + 1 not in touching:
            touching.append(i + 1)
    touching = sorted(set(touching))
    if len(touching) == 1:
        return touching[0]
    if side is None:
        raise BreakpointError(f"{profile.name}: 区間 [{r.lo}, {r.hi}] が折れ点をまたいでいます（side を指定してください）")
    if len(touching) > 2:
        raise BreakpointError(f"{profile.name}: 区間が複数の折れ点をまたいでいます")
    return touching[0] if side == "left" else touching[-1]


def profile_derivatives(
    profile: RadialProfile,
    r: Interval,
    order: int,
    side: Side | None = None,
    width: Fraction = DEFAULT_ENCLOSURE_WIDTH,
) -> Interval:
    """有効な区分の order 階導関数の包含区間"""
    if order not in (1, 2):
        raise DomainError(f"導関数の階数は 1 か 2: {order}")
    if r.lo <= 0:
        raise DomainError(f"r は正でなければなりません: [{r.lo}, {r.hi}]")
    index = _select_piece(profile, r, side, width)
    return profile.pieces[index].derivative(order).evaluate_interval(r, width)


def profile_derivative_exact(
    profile: RadialProfile,
    r: "NumberFieldElem | Fraction | int",
    order: int,
    side: Side = "left",
) -> NumberFieldElem:
    """折れ点では side 側の区分の導関数を使う。"""
    index = profile.piece_index_exact(r, side)
    return profile.pieces[index].derivative(order).evaluate_exact(r)


def radial_laplacian_h(r: Interval, width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """12(−11r⁻¹⁴ + 5r⁻⁸)"""
    if r.lo <= 0:
        raise DomainError(f"r は正でなければなりません: [{r.lo}, {r.hi}]")
    return H_PIECE.laplacian().evaluate_interval(r, width)


def lj_phi(x: "Sequence[float] | npt.NDArray[np.float64]") -> float:
    """Φ(x) = ‖x‖⁻¹² − 2‖x‖⁻⁶"""
    v = np.asarray(x, dtype=float)
    if v.shape != (3,):
        raise DomainError(f"3次元ベクトルが必要です: shape={v.shape}")
    r2 = float(np.dot(v, v))
    if r2 == 0.0:
        raise DomainError("ゼロベクトルでは Φ は定義されません")
    inv6 = r2**-3
    return inv6 * inv6 - 2.0 * inv6


def h_root(width: Fraction = DEFAULT_ENCLOSURE_WIDTH) -> Interval:
    """h の唯一の零点 2^(−1/6) の包含区間"""
    return enclose_h_root(width)


def h_is_negative(r: "Fraction | int | str") -> bool:
    """h(r) < 0 ⇔ r⁶ < 1/2（厳密）"""
    x = as_fraction(r)
    if x <= 0:
        raise DomainError("r は正でなければなりません")
    return x**6 < Fraction(1, 2)
