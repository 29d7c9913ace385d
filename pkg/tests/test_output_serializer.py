import json
from datetime import datetime, timezone
from fractions import Fraction

from ljcert.analysis.interval import Interval
from ljcert.utils.certificate_types import Certificate, Enclosure, Report, SubCheck, Verdict
from ljcert.utils.output_serializer import (
    certificate_to_text,
    format_lower,
    format_rational,
    format_upper,
    report_to_json,
    report_to_text,
    serialize_interval,
)


def _report() -> Report:
    leaf = SubCheck("x > 0", Verdict.PASS, stats={"depth": 2, "boxes": 3})
    bad = SubCheck("y < 1", Verdict.INCONCLUSIVE, witness=Interval(Fraction(1, 2), Fraction(3, 2)))
    cert = Certificate.build(
        "2.4",
        [SubCheck.group("群", [leaf, bad])],
        [Enclosure("s", Interval(Fraction(1140, 1000), Fraction(1141, 1000)), claim="≈ 1.1404")],
    )
    return Report((cert,), {"B_upper": "14.3157"})


def test_directed_decimal_rounding() -> None:
    third = Fraction(1, 3)
    assert format_lower(third) == "0.333333333333"
    assert format_upper(third) == "0.333333333334"
    assert format_lower(Fraction(-1, 3)) == "-0.333333333334"
    assert format_upper(Fraction(1, 2)) == "0.5"


def test_interval_serialisation_contains_value() -> None:
    data = serialize_interval(Interval(Fraction(1, 3), Fraction(2, 3)))
    assert Fraction(data["lo_exact"]) <= Fraction(1, 3)
    assert Fraction(data["hi_exact"]) >= Fraction(2, 3)
    assert Fraction(data["lo_exact"]).denominator <= 10**24


def test_report_json_is_deterministic_and_has_no_timestamp_by_default() -> None:
    report = _report()
    first = report_to_json(report)
    assert first == report_to_json(report)
    data = json.loads(first)
    assert "generated_at" not in data
    assert data["verdict"] == "INCONCLUSIVE"
    group = data["certificates"][0]["checks"][0]
    assert [c["verdict"] for c in group["checks"]] == ["PASS", "INCONCLUSIVE"]
    assert list(group["checks"][0]["stats"]) == ["boxes", "depth"]


def test_report_json_timestamp_is_utc() -> None:
    stamp = datetime(2026, 1, 2, 3, 4, 5, tzinfo=timezone.utc)
    data = json.loads(report_to_json(_report(), timestamp=stamp))
    assert data["generated_at"] == "2026-01-02T03:04:05+00:00"


def test_text_rendering_marks_verdicts() -> None:
    text = certificate_to_text(_report().certificates[0])
    assert text.splitlines()[0] == "命題 2.4: INCONCLUSIVE"
    assert "✓ x > 0" in text
    assert "? y < 1" in text
    assert "証拠区間" in text
    full = report_to_text(_report())
    assert full.endswith("総合判定: INCONCLUSIVE")
    assert "B_upper: 14.3157" in full


def test_rational_labels_render_as_decimals() -> None:
    assert format_rational(Fraction(27, 50)) == "0.54"
    assert format_rational(Fraction(-14451, 10000)) == "-1.4451"
    assert format_rational(Fraction(684, 1000)) == "0.684"
    assert format_rational(Fraction(36)) == "36"
    assert format_rational(3) == "3"
    assert format_rational(Fraction(1, 3)) == "1/3"
