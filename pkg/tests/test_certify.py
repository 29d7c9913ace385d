from fractions import Fraction

import numpy as np
import pytest

from ljcert.analysis.certify import Target, certify_sign, check_lower_bound, check_upper_bound
from ljcert.analysis.interval import Interval
from ljcert.analysis.polynomial import Polynomial
from ljcert.utils.certificate_types import Verdict


def _poly(*coeffs: str) -> Polynomial:
    """昇順係数"""
    return Polynomial(Fraction(c) for c in coeffs)


def test_decreasing_quadratic_is_positive() -> None:
    p = _poly("-0.16692", "1.0023", "-1.4451")
    result = certify_sign(p.evaluate_interval, Interval(Fraction("0.3"), Fraction("0.35")), Target.POSITIVE, label="q")
    assert result.verdict is Verdict.PASS
    assert result.stats["boxes"] >= 1


def test_identity_is_not_negative_on_positive_interval() -> None:
    p = Polynomial.x()
    result = certify_sign(p.evaluate_interval, Interval(1, 2), Target.NEGATIVE, label="r")
    assert result.verdict is Verdict.FAIL
    assert result.witness is not None
    assert result.witness.lo >= 1


def test_region_two_rearrangement_agrees_with_scan() -> None:
    p = _poly("-0.2516", "0.9701", "-0.7558")
    domain = Interval(Fraction("0.51"), Fraction("0.9"))
    result = certify_sign(p.evaluate_interval, domain, Target.POSITIVE, label="region2")
    assert result.verdict is Verdict.PASS
    grid = np.arange(0.51, 0.9 + 1e-12, 1e-4)
    assert np.all([p.evaluate_float(float(r)) > 0 for r in grid])


def test_max_depth_exhaustion_is_inconclusive_not_fail() -> None:
    p = _poly("1.01", "-2", "1")
    shallow = certify_sign(p.evaluate_interval, Interval(0, 2), Target.POSITIVE, label="p", max_depth=0)
    assert shallow.verdict is Verdict.INCONCLUSIVE
    deep = certify_sign(p.evaluate_interval, Interval(0, 2), Target.POSITIVE, label="p")
    assert deep.verdict is Verdict.PASS


def test_pass_is_sound_against_float_scan() -> None:
    rng = np.random.default_rng(3)
    for _ in range(20):
        c0, c1, c2 = (Fraction(int(v), 10) for v in rng.integers(-20, 20, size=3))
        p = Polynomial([c0, c1, c2])
        result = certify_sign(p.evaluate_interval, Interval(0, 1), Target.POSITIVE, label="p", max_depth=12)
        if result.verdict is Verdict.PASS:
            grid = np.arange(0.0, 1.0 + 1e-12, 1e-4)
            assert min(p.evaluate_float(float(x)) for x in grid) > 0


def test_bound_checks_distinguish_inconclusive() -> None:
    assert check_upper_bound("u", Interval(1, 2), 3).verdict is Verdict.PASS
    assert check_upper_bound("u", Interval(1, 4), 3).verdict is Verdict.INCONCLUSIVE
    assert check_upper_bound("u", Interval(3, 4), 3).verdict is Verdict.FAIL
    assert check_lower_bound("l", Interval(1, 2), 0).verdict is Verdict.PASS
    assert check_lower_bound("l", Interval(-1, 0), 0).verdict is Verdict.FAIL


def test_negative_max_depth_rejected() -> None:
    with pytest.raises(ValueError):
        certify_sign(Polynomial.x().evaluate_interval, Interval(1, 2), Target.POSITIVE, label="r", max_depth=-1)
