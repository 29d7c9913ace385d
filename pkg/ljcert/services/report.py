"""
全命題の検証を並行実行して Report にまとめる。

各命題は asyncio.to_thread で実行し、依存先のタスクの完了を待ってから始める。
結果の並びは PROPOSITIONS の順に固定し、実行順序には依存しない。
"""

import asyncio
import logging
from collections.abc import Iterable

from ljcert.analysis.lattice import optimize_fcc_scale
from ljcert.constants.numerics import FCC_DEFAULT_CUTOFF_FACTOR
from ljcert.services.verifier import (
    DEFAULT_CONTEXT,
    DEPENDENCIES,
    PROPOSITIONS,
    VerificationContext,
    run_proposition,
)
from ljcert.utils.certificate_types import Certificate, Report, Verdict
from ljcert.utils.output_serializer import format_rational, format_upper

logger = logging.getLogger(__name__)


def dependency_closure(propositions: Iterable[str]) -> list[str]:
    """指定した命題とその依存先を PROPOSITIONS の順で返す。"""
    wanted: set[str] = set()
    stack = list(propositions)
    while stack:
        prop = stack.pop()
        if prop not in PROPOSITIONS:
            raise ValueError(f"未知の命題です: {prop!r}")
        if prop in wanted:
            continue
        wanted.add(prop)
        stack.extend(DEPENDENCIES.get(prop, ()))
    return [p for p in PROPOSITIONS if p in wanted]


def _summary(certificates: dict[str, Certificate], ctx: VerificationContext, fcc_bound: float | None) -> dict[str, str]:
    cl = ctx.claims
    summary: dict[str, str] = {}
    if "5.1" in certificates and certificates["5.1"].verdict is Verdict.PASS:
        summary["B_upper"] = format_upper(certificates["5.1"].enclosure("B の上界").hi)
    if "3.3" in certificates and certificates["3.3"].verdict is Verdict.PASS:
        summary["min_distance"] = f"> {format_rational(cl.min_distance)}"
    moments = (
        ("3.1-I", f"24·I({format_rational(cl.truncation_wide)})"),
        ("3.1-II", f"24·I({format_rational(cl.truncation_narrow)})"),
    )
    for prop, name in moments:
        if prop in certificates:
            summary[f"mu_bound_{prop}"] = format_upper(certificates[prop].enclosure(name).hi)
    if fcc_bound is not None:
        summary["B_lower"] = f"{fcc_bound:.2f}"
    return summary


async def run_all(
    ctx: VerificationContext = DEFAULT_CONTEXT,
    propositions: Iterable[str] | None = None,
    *,
    jobs: int = 1,
    include_fcc: bool = False,
) -> Report:
    """命題を検証する。propositions を省略すると全命題。"""
    if jobs < 1:
        raise ValueError(f"jobs は 1 以上: {jobs}")
    order = dependency_closure(propositions) if propositions is not None else list(PROPOSITIONS)
    semaphore = asyncio.Semaphore(jobs)
    tasks: dict[str, asyncio.Task[Certificate]] = {}

    async def run_one(prop: str) -> Certificate:
        deps = {dep: await tasks[dep] for dep in DEPENDENCIES.get(prop, ()) if dep in tasks}
        async with semaphore:
            return await asyncio.to_thread(run_proposition, prop, ctx, deps if prop in DEPENDENCIES else None)

    for prop in order:
        tasks[prop] = asyncio.create_task(run_one(prop))
    results = dict(zip(order, await asyncio.gather(*tasks.values())))

    fcc_bound = None
    if include_fcc:
        fcc = await asyncio.to_thread(optimize_fcc_scale, FCC_DEFAULT_CUTOFF_FACTOR)
        fcc_bound = fcc.stability_lower_bound

    report = Report(tuple(results[p] for p in order), _summary(results, ctx, fcc_bound))
    logger.info(f"検証完了: {report.verdict.value} ({len(order)} 命題)")
    return report
