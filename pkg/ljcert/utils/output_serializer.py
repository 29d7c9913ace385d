"""
出力境界での Certificate / Report の整形ユーティリティ。

包含区間は 12 桁の10進表記（下端は切り下げ、上端は切り上げ）と、
分母 10²⁴ で外側に丸めた厳密な有理数の文字列の両方で出す。
同じ Report からは常に同じバイト列が得られる。
"""

import json
from datetime import datetime, timezone
from decimal import ROUND_CEILING, ROUND_FLOOR, Context, Decimal
from fractions import Fraction
from typing import Any

from ljcert.analysis.interval import Interval
from ljcert.constants.numerics import DECIMAL_SIGNIFICANT_DIGITS, REPORT_ENCLOSURE_DENOMINATOR
from ljcert.utils.certificate_types import Certificate, Enclosure, Report, SubCheck, Verdict

_MARKERS: dict[Verdict, str] = {
    Verdict.PASS: "✓",
    Verdict.FAIL: "✗",
    Verdict.INCONCLUSIVE: "?",
}


def _decimal(value: Fraction | float, rounding: str) -> str:
    ctx = Context(prec=DECIMAL_SIGNIFICANT_DIGITS, rounding=rounding)
    if isinstance(value, float):
        return str(ctx.create_decimal_from_float(value))
    q = Fraction(value)
    return str(ctx.divide(Decimal(q.numerator), Decimal(q.denominator)))


def format_lower(value: Fraction | float) -> str:
    """12 桁に切り下げた10進表記"""
    return _decimal(value, ROUND_FLOOR)


def format_upper(value: Fraction | float) -> str:
    """12 桁に切り上げた10進表記"""
    return _decimal(value, ROUND_CEILING)


def format_rational(value: Fraction | int) -> str:
    """有限小数で書ける有理数は10進表記（例: 0.54）、それ以外は p/q"""
    q = Fraction(value)
    den = q.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    if den != 1:
        return str(q)
    text = format(Context(prec=64).divide(Decimal(q.numerator), Decimal(q.denominator)), "f")
    if "." in text:
        text = text.rstrip("0").rstrip(".")
    return text


def _exact(value: Fraction) -> str:
    return str(value)


def serialize_interval(value: Interval) -> dict[str, str]:
    rounded = value.round_out(REPORT_ENCLOSURE_DENOMINATOR)
    return {
        "lo": format_lower(value.lo),
        "hi": format_upper(value.hi),
        "lo_exact": _exact(rounded.lo),
        "hi_exact": _exact(rounded.hi),
    }


def serialize_enclosure(enclosure: Enclosure) -> dict[str, Any]:
    data: dict[str, Any] = {"name": enclosure.name, **serialize_interval(enclosure.value)}
    if enclosure.claim is not None:
        data["claim"] = enclosure.claim
    return data


def serialize_subcheck(check: SubCheck) -> dict[str, Any]:
    data: dict[str, Any] = {"label": check.label, "verdict": check.verdict.value}
    if check.detail is not None:
        data["detail"] = check.detail
    if check.witness is not None:
        data["witness"] = serialize_interval(check.witness)
    if check.stats:
        data["stats"] = dict(sorted(check.stats.items()))
    if check.children:
        data["checks"] = [serialize_subcheck(c) for c in check.children]
    return data


def serialize_certificate(cert: Certificate) -> dict[str, Any]:
    return {
        "proposition": cert.proposition,
        "verdict": cert.verdict.value,
        "enclosures": [serialize_enclosure(e) for e in cert.enclosures],
        "checks": [serialize_subcheck(c) for c in cert.checks],
    }


def serialize_report(report: Report, *, timestamp: datetime | None = None) -> dict[str, Any]:
    data: dict[str, Any] = {
        "verdict": report.verdict.value,
        "summary": dict(report.summary),
        "certificates": [serialize_certificate(c) for c in report.certificates],
    }
    if timestamp is not None:
        data["generated_at"] = timestamp.astimezone(timezone.utc).isoformat()
    return data


def report_to_json(report: Report, *, timestamp: datetime | None = None) -> str:
    return json.dumps(serialize_report(report, timestamp=timestamp), ensure_ascii=False, indent=2)


def _render_check(check: SubCheck, depth: int, lines: list[str]) -> None:
    indent = "  " * depth
    line = f"{indent}{_MARKERS[check.verdict]} {check.label}"
    if check.detail:
        line += f"  ({check.detail})"
    if check.witness is not None and check.verdict is not Verdict.PASS:
        line += f"  証拠区間 [{format_lower(check.witness.lo)}, {format_upper(check.witness.hi)}]"
    lines.append(line)
    for child in check.children:
        _render_check(child, depth + 1, lines)


def certificate_to_text(cert: Certificate) -> str:
    lines = [f"命題 {cert.proposition}: {cert.verdict.value}"]
    for e in cert.enclosures:
        claim = f"  主張 {e.claim}" if e.claim else ""
        lines.append(f"  {e.name} ∈ [{format_lower(e.value.lo)}, {format_upper(e.value.hi)}]{claim}")
    for check in cert.checks:
        _render_check(check, 1, lines)
    return "\n".join(lines)


def report_to_text(report: Report, *, timestamp: datetime | None = None) -> str:
    blocks = [certificate_to_text(c) for c in report.certificates]
    summary = [f"  {k}: {v}" for k, v in report.summary.items()]
    tail = [f"総合判定: {report.verdict.value}"]
    if summary:
        tail = ["要約:", *summary, *tail]
    if timestamp is not None:
        tail.append(f"生成日時: {timestamp.astimezone(timezone.utc).isoformat()}")
    return "\n\n".join(blocks) + "\n\n" + "\n".join(tail)
