import random
from fractions import Fraction

import pytest
import sympy

from ljcert.analysis.interval import Interval
from ljcert.analysis.polynomial import (
    Polynomial,
    cauchy_bound,
    descartes_bound,
    isolate_roots,
    polynomial_gcd,
    refine_root,
    sturm_chain,
    sturm_count,
)
from ljcert.utils.errors import NotSquarefreeError, PolynomialError

X = sympy.Symbol("x")


def _to_sympy(p: Polynomial) -> sympy.Poly:
    return sympy.Poly(sum(sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(p.coeffs)), X)


def _from_roots(*roots: int) -> Polynomial:
    p = Polynomial([1])
    for r in roots:
        p = p * Polynomial([-r, 1])
    return p


def test_division_identity() -> None:
    a = Polynomial([5, -3, 0, 2, 7])
    b = Polynomial([1, 0, 3])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree < b.degree


def test_gcd_of_shared_factor() -> None:
    a = _from_roots(1, 2, 3)
    b = _from_roots(2, 3, 5)
    assert polynomial_gcd(a, b) == _from_roots(2, 3)


@pytest.mark.parametrize(
    "roots, a, b",
    [
        ((-3, -1, 2, 4), "-3.5", "4.5"),
        ((-3, -1, 2, 4), "-0.5", "3.5"),
        ((0, 1, 2, 3, 4), "0.5", "2.5"),
        ((-2, 5), "-1.5", "4.5"),
    ],
)
def test_sturm_count_matches_sympy(roots: tuple[int, ...], a: str, b: str) -> None:
    p = _from_roots(*roots) * Polynomial([1, 0, 1])
    expected = _to_sympy(p).count_roots(sympy.Rational(a), sympy.Rational(b))
    assert sturm_count(p, a, b) == expected


def test_sturm_count_is_half_open() -> None:
    p = _from_roots(1, 2)
    assert sturm_count(p, 1, 2) == 1
    assert sturm_count(p, 0, 1) == 1
    assert sturm_count(p, "1.5", 3) == 1


def test_descartes_bound_counts_sign_changes() -> None:
    q = Polynomial.from_terms({12: Fraction(-25, 11), 11: 3, 6: -2, 0: 1})
    assert descartes_bound(q) == 3
    with pytest.raises(PolynomialError):
        descartes_bound(Polynomial([]))


def test_isolate_roots_of_cubic_factor() -> None:
    cubic = Polynomial([-3, -2, 0, 1])  # x³ − 2x − 3, one real root near 1.893
    roots = isolate_roots(cubic, Interval(-10, 10), "1e-6")
    assert len(roots) == 1
    (root,) = roots
    assert root.interval.width <= Fraction(1, 10**6)
    assert root.midpoint == pytest.approx(1.893289, abs=1e-5)


def test_isolated_intervals_are_disjoint_and_complete() -> None:
    p = _from_roots(-2, 0, 1) * Polynomial([-2, 0, 1])  # extra roots ±√2
    roots = isolate_roots(p, Interval(-5, 5), "1e-3")
    assert len(roots) == 5
    for left, right in zip(roots, roots[1:]):
        assert left.interval.hi <= right.interval.lo
    assert roots[2].interval.contains(0)
    assert roots[-1].midpoint == pytest.approx(2**0.5, abs=1e-3)


def test_refine_root_narrows_without_losing_it() -> None:
    p = Polynomial([-2, 0, 1])
    (first, second) = isolate_roots(p, Interval(-2, 2), "0.1")
    refined = refine_root(p, second, Fraction(1, 10**12))
    assert refined.interval.width <= Fraction(1, 10**12)
    assert refined.interval.lo**2 <= 2 <= refined.interval.hi**2
    assert first.midpoint < 0


def test_repeated_root_is_rejected() -> None:
    with pytest.raises(NotSquarefreeError):
        isolate_roots(_from_roots(1, 1, 3), Interval(0, 4), "1e-3")


def _random_rational_root_polynomial(rng: random.Random) -> tuple[Polynomial, list[Fraction]]:
    roots = [Fraction(rng.randint(-40, 40), rng.randint(1, 8)) for _ in range(rng.randint(1, 6))]
    p = Polynomial([rng.choice([-3, -1, 1, 2])])
    for r in roots:
        p = p * Polynomial([-r, 1])
    return p, roots


@pytest.mark.parametrize("seed", range(20))
def test_sturm_count_is_additive_over_split_points(seed: int) -> None:
    rng = random.Random(seed)
    p, _ = _random_rational_root_polynomial(rng)
    a = Fraction(rng.randint(-120, -1), rng.randint(1, 7))
    c = Fraction(rng.randint(1, 120), rng.randint(1, 7))
    b = a + (c - a) * Fraction(rng.randint(1, 99), 100)
    assert sturm_count(p, a, b) + sturm_count(p, b, c) == sturm_count(p, a, c)


@pytest.mark.parametrize("seed", range(20))
def test_descartes_bound_dominates_positive_root_count(seed: int) -> None:
    rng = random.Random(100 + seed)
    p, roots = _random_rational_root_polynomial(rng)
    assert descartes_bound(p) >= sturm_count(p, 0, cauchy_bound(p))
    assert sturm_count(p, 0, cauchy_bound(p)) == len({r for r in roots if r > 0})


def test_sturm_count_small_cases() -> None:
    p = Polynomial([-2, 0, 1])
    assert sturm_count(p, 0, 2) == 1
    assert sturm_count(p, 2, 3) == 0
    assert descartes_bound(Polynomial([1, 0, 1])) == 0
    assert descartes_bound(Polynomial([-1, 1])) == 1


def test_sturm_chain_starts_from_squarefree_part() -> None:
    chain = sturm_chain(_from_roots(1, 1, 2))
    assert chain[0].degree == 2


def test_cubic_factor_roots_and_vieta() -> None:
    c1 = Fraction(113) / (2 * Fraction("0.98") ** 3)
    c2 = Fraction(-8475, 49)
    cubic = Polynomial.from_terms({3: 135 * c1, 1: 91 * c2, 0: 7992})
    roots = isolate_roots(cubic, Interval(-2, 2), Fraction(1, 10**5))
    assert [r.midpoint for r in roots] == pytest.approx([-1.59958, 0.647647, 0.951934], abs=1e-4)
    total = roots[0].interval + roots[1].interval + roots[2].interval
    assert total.contains(0)


def test_refined_enclosures_keep_a_single_sign_change() -> None:
    p = Polynomial([-2, 0, 1]) * Polynomial([-3, 0, 1])
    for enclosure in isolate_roots(p, Interval(-3, 3), "0.01"):
        refined = refine_root(p, enclosure, Fraction(1, 10**12))
        lo, hi = refined.interval.lo, refined.interval.hi
        assert hi - lo <= Fraction(1, 10**12)
        assert p(lo) * p(hi) < 0
        assert sturm_count(p, lo, hi) == 1


def test_polynomial_matches_sympy_representation() -> None:
    p = Polynomial([Fraction(1, 3), 0, -2, 5])
    assert p.sympy == sympy.Poly(5 * X**3 - 2 * X**2 + sympy.Rational(1, 3), X, domain=sympy.QQ)
    assert Polynomial.from_sympy(p.sympy) == p
