import json
import logging
import sys
from datetime import datetime, timezone

from ljcert.analysis.integrals import moment_integral, quadrature_theta_moment
from ljcert.infrastructure.settings import settings_store
from ljcert.utils.certificate_types import Verdict

from .parser import PROPOSITION_CHOICES

logger = logging.getLogger(__name__)


async def cmd_verify(args) -> int:
    """命題検証コマンド"""
    from ljcert.services.report import run_all
    from ljcert.services.verifier import VerificationContext
    from ljcert.utils.output_serializer import report_to_json, report_to_text

    ctx = VerificationContext(
        max_depth=args.max_depth if args.max_depth is not None else settings_store.max_depth,
        width=args.enclosure_width if args.enclosure_width is not None else settings_store.enclosure_width,
    )
    jobs = args.jobs if args.jobs is not None else settings_store.jobs
    target = PROPOSITION_CHOICES[args.prop]
    report = await run_all(ctx, None if target is None else [target], jobs=jobs, include_fcc=args.with_fcc)

    stamp = datetime.now(timezone.utc) if args.timestamp else None
    if args.format == "json":
        print(report_to_json(report, timestamp=stamp))
    else:
        print(report_to_text(report, timestamp=stamp))
    return 0 if report.verdict is Verdict.PASS else 1


def cmd_integral(args) -> int:
    """θ の2次モーメント積分コマンド"""
    from ljcert.utils.output_serializer import format_lower, format_upper, serialize_interval

    result = moment_integral(args.lower, settings_store.enclosure_width)
    approx, err = quadrature_theta_moment(float(args.lower))
    if args.format == "json":
        data = {
            "lower": str(result.lower),
            "enclosure": serialize_interval(result.value),
            "exact": repr(result.exact),
            "quadrature": {"value": approx, "error": err},
        }
        print(json.dumps(data, indent=2, ensure_ascii=False))
        return 0

    print(f"∫_{result.lower}^∞ θ(w) w² dw ∈ [{format_lower(result.value.lo)}, {format_upper(result.value.hi)}]")
    print(f"  厳密値: {result.exact!r}", file=sys.stderr)
    print(f"  数値積分: {approx:.12g} (誤差推定 {err:.1e})", file=sys.stderr)
    return 0
