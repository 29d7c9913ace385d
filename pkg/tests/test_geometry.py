from fractions import Fraction

import numpy as np
import pytest
from scipy.stats import qmc

from ljcert.analysis.geometry import (
    BallPair,
    ball_volume_over_pi,
    cap_area,
    cap_area_over_pi,
    cap_height,
    equal_ball_lens_ratio,
    lens_volume,
    lens_volume_over_pi,
)
from ljcert.analysis.interval import enclose_pi
from ljcert.utils.errors import DomainError


def test_unit_lens_at_unit_distance() -> None:
    assert lens_volume_over_pi(BallPair(1, 1, 1)) == Fraction(5, 12)
    assert lens_volume(BallPair(1, 1, 1)).contains(enclose_pi().lo * Fraction(5, 12))


def test_disjoint_and_nested_cases() -> None:
    assert lens_volume_over_pi(BallPair(1, 1, 2)) == 0
    assert lens_volume_over_pi(BallPair(1, 1, 3)) == 0
    assert lens_volume_over_pi(BallPair(1, 3, Fraction(1, 2))) == ball_volume_over_pi(1)
    assert equal_ball_lens_ratio("0.35", 0) == 1


def test_formula_is_continuous_at_internal_tangency() -> None:
    r1, r2 = Fraction(1), Fraction(2)
    d = r2 - r1
    s = r1 + r2 - d
    formula = s * s * (d * d + 2 * d * (r1 + r2) - 3 * (r1 - r2) ** 2) / (12 * d)
    assert formula == lens_volume_over_pi(BallPair(r1, r2, d)) == ball_volume_over_pi(r1)


@pytest.mark.parametrize("r1, r2, d", [("1", "1", "1"), ("0.35", "0.35", "0.2"), ("1", "1.5", "1.2")])
def test_cap_area_is_sphere_zone(r1: str, r2: str, d: str) -> None:
    p = BallPair(r1, r2, d)
    height = cap_height(p)
    assert cap_area_over_pi(p) == 2 * p.r1 * height.lo
    assert cap_area(p).width > 0


@pytest.mark.parametrize("r1, r2, d", [("1", "1", "1"), ("0.8", "1.3", "1.1"), ("1", "1.5", "0.7")])
def test_volume_derivative_in_radius_is_cap_area(r1: str, r2: str, d: str) -> None:
    h = Fraction(1, 10**6)
    p = BallPair(r1, r2, d)
    up = lens_volume_over_pi(BallPair(p.r1 + h, p.r2, p.d))
    down = lens_volume_over_pi(BallPair(p.r1 - h, p.r2, p.d))
    assert float((up - down) / (2 * h)) == pytest.approx(float(cap_area_over_pi(p)), abs=1e-9)


@pytest.mark.parametrize("d", [0.1, 0.25, 0.5, 0.9])
def test_lens_ratio_matches_sobol_estimate(d: float) -> None:
    sampler = qmc.Sobol(d=3, scramble=True, seed=11)
    pts = qmc.scale(sampler.random_base2(m=16), [-1, -1, -1], [1, 1, 1])
    in_first = np.sum(pts * pts, axis=1) <= 1.0
    shifted = pts - np.array([d, 0.0, 0.0])
    in_both = in_first & (np.sum(shifted * shifted, axis=1) <= 1.0)
    estimate = in_both.sum() / in_first.sum()
    assert estimate == pytest.approx(float(equal_ball_lens_ratio(1, Fraction(d))), abs=5e-3)


def test_invalid_pairs_rejected() -> None:
    with pytest.raises(DomainError):
        BallPair(-1, 1, 1)
    with pytest.raises(DomainError):
        BallPair(1, 1, -1)
    with pytest.raises(DomainError):
        cap_height(BallPair(1, 1, 0))


def _random_lens_pairs(count: int, seed: int) -> list[BallPair]:
    rng = np.random.default_rng(seed)
    pairs: list[BallPair] = []
    while len(pairs) < count:
        r1, r2 = (Fraction(int(k), 100) for k in rng.integers(30, 151, size=2))
        if r1 == r2:
            continue
        lo, hi = abs(r1 - r2), r1 + r2
        d = lo + (hi - lo) * Fraction(int(rng.integers(5, 96)), 100)
        pairs.append(BallPair(r1, r2, d))
    return pairs


RANDOM_PAIRS = _random_lens_pairs(20, seed=7)


@pytest.fixture(scope="module")
def sobol_unit_points() -> np.ndarray:
    return qmc.Sobol(d=3, scramble=True, seed=5).random_base2(m=20)


@pytest.mark.parametrize("p", RANDOM_PAIRS, ids=lambda p: f"{p.r1}-{p.r2}-{p.d}")
def test_lens_volume_matches_sampling(p: BallPair, sobol_unit_points: np.ndarray) -> None:
    r1, r2, d = float(p.r1), float(p.r2), float(p.d)
    pts = (2.0 * sobol_unit_points - 1.0) * r1
    shifted = pts - np.array([d, 0.0, 0.0])
    inside = (np.sum(pts * pts, axis=1) <= r1 * r1) & (np.sum(shifted * shifted, axis=1) <= r2 * r2)
    n = len(pts)
    frac = inside.sum() / n
    box = (2.0 * r1) ** 3
    sigma = box * np.sqrt(frac * (1.0 - frac) / n)
    assert abs(box * frac - float(lens_volume(p).mid)) <= 3.0 * sigma


@pytest.mark.parametrize("p", RANDOM_PAIRS, ids=lambda p: f"{p.r1}-{p.r2}-{p.d}")
def test_cap_area_matches_sampling(p: BallPair, sobol_unit_points: np.ndarray) -> None:
    r1, r2, d = float(p.r1), float(p.r2), float(p.d)
    # (z, φ) の一様分布は球面上の一様分布
    z = 2.0 * sobol_unit_points[:, 0] - 1.0
    phi = 2.0 * np.pi * sobol_unit_points[:, 1]
    rho = np.sqrt(1.0 - z * z)
    on_sphere = r1 * np.column_stack([z, rho * np.cos(phi), rho * np.sin(phi)])
    shifted = on_sphere - np.array([d, 0.0, 0.0])
    inside = np.sum(shifted * shifted, axis=1) <= r2 * r2
    n = len(on_sphere)
    frac = inside.sum() / n
    sphere = 4.0 * np.pi * r1 * r1
    sigma = sphere * np.sqrt(frac * (1.0 - frac) / n)
    assert abs(sphere * frac - float(cap_area(p).mid)) <= 3.0 * sigma


@pytest.mark.parametrize("p", RANDOM_PAIRS, ids=lambda p: f"{p.r1}-{p.r2}-{p.d}")
def test_volume_derivative_matches_cap_area_for_unequal_radii(p: BallPair) -> None:
    h = Fraction(1, 10**6)
    up = lens_volume(BallPair(p.r1 + h, p.r2, p.d)).mid
    down = lens_volume(BallPair(p.r1 - h, p.r2, p.d)).mid
    assert float((up - down) / (2 * h)) == pytest.approx(float(cap_area(p).mid), rel=1e-4)
