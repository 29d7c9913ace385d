"""
区間上の符号判定（適応二分法）と比較チェック

FAIL は反例（目標と逆符号が確定した区間または点）があるときだけ返す。
最大深さまで決まらなかった場合は INCONCLUSIVE。
"""

import logging
from collections.abc import Callable
from enum import Enum
from fractions import Fraction

from ljcert.analysis.interval import Interval, as_fraction
from ljcert.constants.numerics import DEFAULT_MAX_DEPTH
from ljcert.utils.certificate_types import SubCheck, Verdict
from ljcert.utils.errors import DomainError, IntervalDivisionError

logger = logging.getLogger(__name__)

IntervalFunction = Callable[[Interval], Interval]


class Target(str, Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"

    def holds(self, image: Interval) -> bool:
        return image.is_positive() if self is Target.POSITIVE else image.is_negative()

    def violated(self, image: Interval) -> bool:
        """像全体が目標の符号を満たさない（0 を含めて逆側）"""
        return image.hi <= 0 if self is Target.POSITIVE else image.lo >= 0


def certify_sign(
    f: IntervalFunction,
    domain: Interval,
    target: Target,
    *,
    label: str,
    max_depth: int = DEFAULT_MAX_DEPTH,
) -> SubCheck:
    """domain 上で f が target の符号を持つことを二分法で確かめる。

    max_depth は二分割の段数の上限。箱は左から順に調べるので、結果は
    実行順序によらず一意に決まる。
    """
    if max_depth < 0:
        raise DomainError(f"max_depth は 0 以上: {max_depth}")
    stack: list[tuple[Interval, int]] = [(domain, 0)]
    examined = 0
    deepest = 0
    while stack:
        box, depth = stack.pop()
        examined += 1
        deepest = max(deepest, depth)
        try:
            image = f(box)
        except IntervalDivisionError:
            image = None
        if image is not None and target.holds(image):
            continue
        if image is not None and target.violated(image):
            return _result(label, Verdict.FAIL, box, examined, deepest, f"f の像 [{float(image.lo):.6g}, {float(image.hi):.6g}]")
        mid_box = Interval.point(box.mid)
        try:
            mid_image = f(mid_box)
        except IntervalDivisionError:
            mid_image = None
        if mid_image is not None and target.violated(mid_image):
            return _result(label, Verdict.FAIL, mid_box, examined, deepest, "中点で逆符号")
        if depth >= max_depth or box.width == 0:
            logger.warning(f"{label}: 深さ {depth} で符号が決まりません (区間 [{float(box.lo)}, {float(box.hi)}])")
            return _result(label, Verdict.INCONCLUSIVE, box, examined, deepest, "最大深さに到達")
        left, right = box.split()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))
    logger.debug(f"{label}: PASS (箱 {examined} 個, 最大深さ {deepest})")
    return _result(label, Verdict.PASS, None, examined, deepest, None)


def _result(
    label: str,
    verdict: Verdict,
    witness: Interval | None,
    examined: int,
    deepest: int,
    detail: str | None,
) -> SubCheck:
    return SubCheck(
        label=label,
        verdict=verdict,
        witness=witness,
        detail=detail,
        stats={"boxes": examined, "depth": deepest},
    )


# ----------------------------------------------------------------------
# 包含区間と定数の比較


def check_upper_bound(label: str, value: Interval, bound: "Fraction | int | str") -> SubCheck:
    """value < bound"""
    b = as_fraction(bound)
    if value.hi < b:
        verdict = Verdict.PASS
    elif value.lo >= b:
        verdict = Verdict.FAIL
    else:
        verdict = Verdict.INCONCLUSIVE
    return SubCheck(label, verdict, witness=value, detail=f"< {b}")


def check_lower_bound(label: str, value: Interval, bound: "Fraction | int | str") -> SubCheck:
    """value > bound"""
    b = as_fraction(bound)
    if value.lo > b:
        verdict = Verdict.PASS
    elif value.hi <= b:
        verdict = Verdict.FAIL
    else:
        verdict = Verdict.INCONCLUSIVE
    return SubCheck(label, verdict, witness=value, detail=f"> {b}")


def check_exact(label: str, condition: bool, detail: str | None = None) -> SubCheck:
    """厳密な有理数・ℚ(s) 演算で決まる真偽"""
    return SubCheck(label, Verdict.PASS if condition else Verdict.FAIL, detail=detail)
