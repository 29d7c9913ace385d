from dataclasses import replace
from fractions import Fraction

import pytest

from ljcert.analysis.interval import Interval
from ljcert.analysis.number_field import nf_eval
from ljcert.analysis.polynomial import sturm_count
from ljcert.constants.bounds import DEFAULT_CLAIMS
from ljcert.services import verifier
from ljcert.services.verifier import (
    DEPENDENCIES,
    PROPOSITIONS,
    VerificationContext,
    cancellation_polynomials,
    crossing_polynomial,
    q_polynomial,
    run_proposition,
    verify_appendix,
    verify_cor_3_3,
    verify_prop_3_1,
    verify_theorem_5_1,
)
from ljcert.utils.certificate_types import Certificate, Verdict


@pytest.fixture(scope="module")
def default_certificates() -> dict[str, Certificate]:
    results: dict[str, Certificate] = {}
    for prop in PROPOSITIONS:
        deps = {d: results[d] for d in DEPENDENCIES.get(prop, ())} if prop in DEPENDENCIES else None
        results[prop] = run_proposition(prop, dependencies=deps)
    return results


@pytest.mark.parametrize("prop", PROPOSITIONS)
def test_every_proposition_passes_with_default_claims(default_certificates, prop: str) -> None:
    cert = default_certificates[prop]
    assert cert.verdict is Verdict.PASS, cert


def test_stability_bound_enclosure(default_certificates) -> None:
    b = default_certificates["5.1"].enclosure("B の上界")
    assert float(b.hi) == pytest.approx(14.3156, abs=2e-4)
    assert b.hi < Fraction("14.316")
    assert b.width < Fraction(1, 10**15)


def test_moment_enclosures_in_certificates(default_certificates) -> None:
    wide = default_certificates["3.1-I"].enclosure("24·I(0.54)")
    narrow = default_certificates["3.1-II"].enclosure("24·I(0.64)")
    assert float(wide.mid) == pytest.approx(26.9475, abs=1e-3)
    assert float(narrow.mid) == pytest.approx(24.046, abs=1e-3)


def test_crossing_point_lies_just_above_claimed_distance(default_certificates) -> None:
    crossing = default_certificates["3.3"].enclosure("交点")
    assert Fraction("0.684") < crossing.lo < crossing.hi < Fraction("0.685")


def test_appendix_root_layout(default_certificates) -> None:
    cert = default_certificates["appendix"]
    assert float(cert.enclosure("ρ₁").mid) == pytest.approx(-1.599587, abs=1e-4)
    assert float(cert.enclosure("ρ₂").mid) == pytest.approx(0.64765, abs=1e-4)
    assert float(cert.enclosure("ρ₃").mid) == pytest.approx(0.951937, abs=1e-4)
    assert cert.enclosure("R(ρ₃)").lo > 0


def test_tangency_polynomial_has_triple_root_at_s() -> None:
    q = q_polynomial()
    assert nf_eval(q).is_zero()
    assert nf_eval(q.derivative()).is_zero()
    assert nf_eval(q.derivative().derivative()).is_zero()


def test_crossing_polynomial_values() -> None:
    f = crossing_polynomial(Fraction("24.05"))
    assert float(f(Fraction("0.684")) + 1) == pytest.approx(0.993, abs=1e-3)
    assert float(f(Fraction("0.685")) + 1) == pytest.approx(1.00522, abs=1e-4)
    assert sturm_count(f, "0.684", "0.685") == 1


def test_cancellation_coefficients() -> None:
    polys = cancellation_polynomials(Fraction(113), Fraction("0.98"))
    assert polys.c2 == Fraction(-8475, 49)
    assert polys.P(0) == -2
    assert polys.P(Fraction("0.98")) < 0


def test_variant_names() -> None:
    assert verify_prop_3_1("3.1-II").proposition == "3.1-II"
    assert verify_prop_3_1("3.1ii").proposition == "3.1-II"
    with pytest.raises(ValueError):
        verify_prop_3_1("III")
    with pytest.raises(ValueError):
        run_proposition("6.2")


def test_missing_dependency_is_inconclusive() -> None:
    cert = verify_cor_3_3(dependencies={})
    assert cert.verdict is Verdict.INCONCLUSIVE
    assert cert.find("依存 3.1-II").verdict is Verdict.INCONCLUSIVE


@pytest.mark.parametrize(
    "field, value, prop",
    [
        ("t_offset", Fraction("2.4"), "2.4"),
        ("moment_bound_wide", Fraction("26.68"), "3.1-I"),
        ("moment_bound_narrow", Fraction("23.81"), "3.1-II"),
        ("stability_bound", Fraction("14.17"), "5.1"),
        ("density_moment_bound", Fraction("35.64"), "5.1"),
        ("density_bound", Fraction("111.87"), "5.1"),
        ("density_bound", Fraction("111.87"), "appendix"),
        ("min_distance", Fraction("0.69084"), "3.3"),
        ("club_bound", (Fraction("22.24"), Fraction("12.639"), Fraction("8.343")), "3.1-II"),
        ("decreasing_quadratic", (Fraction("-1.4451"), Fraction("1.0023"), Fraction("-0.16525")), "3.1-II"),
        ("narrow_quadratic", (Fraction("0.7224"), Fraction("-0.7225"), Fraction("1.2589"), Fraction("-0.559746")), "3.1-II"),
        ("region2_quadratic", (Fraction("-0.7558"), Fraction("1.127"), Fraction("-0.249084")), "4.1"),
        ("region3_quadratic", (Fraction("-1.0199"), Fraction("1.7357"), Fraction("-0.547218")), "4.1"),
        ("ball_radius", Fraction("0.4851"), "4.1"),
        ("ball_radius", Fraction("0.4851"), "5.1"),
        ("truncation_wide", Fraction("0.5346"), "3.1-I"),
        ("truncation_wide", Fraction("0.5346"), "5.1"),
        ("truncation_narrow", Fraction("0.6336"), "3.1-II"),
        ("narrow_outer_limit", Fraction("1.1781"), "3.1-II"),
        ("t_positive_limit", Fraction("1.5049"), "3.1-II"),
        ("region_inner", Fraction("0.5049"), "4.1"),
        ("region_split", Fraction("0.891"), "4.1"),
        ("region_outer", Fraction("1.0403"), "4.1"),
        ("near_origin_radius", Fraction("0.8989"), "3.1-I"),
        ("near_origin_radius", Fraction("0.8989"), "3.1-II"),
    ],
)
def test_adverse_claim_fails(default_certificates, field: str, value, prop: str) -> None:
    ctx = VerificationContext(claims=replace(DEFAULT_CLAIMS, **{field: value}))
    deps = {d: default_certificates[d] for d in DEPENDENCIES.get(prop, ())} if prop in DEPENDENCIES else None
    cert = run_proposition(prop, ctx, deps)
    assert cert.verdict is Verdict.FAIL


def _widened(eps: Fraction):  # type: ignore[no-untyped-def]
    original = verifier.theta_moment

    def theta_moment(lower, width=verifier.DEFAULT_ENCLOSURE_WIDTH):  # type: ignore[no-untyped-def]
        value = original(lower, width)
        return Interval(value.lo - eps, value.hi + eps)

    return theta_moment


def test_small_widening_keeps_pass(monkeypatch, default_certificates) -> None:
    monkeypatch.setattr(verifier, "theta_moment", _widened(Fraction(1, 10**5)))
    cert = verify_theorem_5_1(dependencies=default_certificates)
    assert cert.verdict is Verdict.PASS


def test_large_widening_is_inconclusive_not_fail(monkeypatch, default_certificates) -> None:
    monkeypatch.setattr(verifier, "theta_moment", _widened(Fraction(1, 10**4)))
    cert = verify_theorem_5_1(dependencies=default_certificates)
    assert cert.verdict is Verdict.INCONCLUSIVE


def test_shallow_depth_never_fails() -> None:
    cert = verify_appendix(VerificationContext(max_depth=0))
    assert cert.verdict is not Verdict.FAIL
    narrow = verify_prop_3_1("II", VerificationContext(max_depth=1))
    assert narrow.verdict is Verdict.INCONCLUSIVE
