import json
import logging
import sys
from pathlib import Path

from ljcert.analysis.cluster import diameter, min_distance, per_particle_minus_energies, total_energy
from ljcert.constants.bounds import DEFAULT_CLAIMS, FCC_LOWER_BOUND
from ljcert.infrastructure.settings import settings_store
from ljcert.utils.config_file import format_configuration, read_configuration, write_configuration

logger = logging.getLogger(__name__)


def _emit_configuration(q, output: str | None, comment: str) -> None:  # type: ignore[no-untyped-def]
    if output:
        write_configuration(Path(output), q, comment)
        print(f"書き出しました: {output}", file=sys.stderr)
    else:
        sys.stdout.write(format_configuration(q, comment))


def cmd_energy(args) -> int:
    """配置のエネルギー・距離の表示"""
    q = read_configuration(Path(args.file))
    energy = total_energy(q)
    per_particle = energy / len(q)
    d_min = min_distance(q)
    d_max, i, j = diameter(q)
    minus = per_particle_minus_energies(q)
    bound = -float(DEFAULT_CLAIMS.stability_bound)
    data = {
        "particles": len(q),
        "total_energy": energy,
        "energy_per_particle": per_particle,
        "min_distance": d_min,
        "diameter": d_max,
        "diameter_pair": [i, j],
        "max_minus_energy": float(minus.max()),
        "stability_bound": bound,
        "within_stability_bound": per_particle >= bound,
        "fcc_energy_per_particle": -float(FCC_LOWER_BOUND),
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
        return 0

    print(f"粒子数: {len(q)}")
    print(f"全エネルギー: {energy:.12g}")
    print(f"1粒子あたり: {per_particle:.12g}  (下界 {bound}, FCC {-float(FCC_LOWER_BOUND)})")
    print(f"最小距離: {d_min:.12g}  (下界 {DEFAULT_CLAIMS.min_distance}, 最小エネルギー配置の場合)")
    print(f"直径: {d_max:.12g}  (粒子 {i}, {j})")
    if per_particle < bound:
        logger.warning(f"1粒子あたりのエネルギー {per_particle:.12g} が下界 {bound} を下回っています")
    return 0


def cmd_fcc(args) -> int:
    """FCC 格子和コマンド"""
    from ljcert.analysis.lattice import fcc_energy_per_particle, optimize_fcc_scale

    # --cutoff は半径。省略時は設定の倍率 × scale
    factor = settings_store.fcc_cutoff_factor
    if args.optimize_scale:
        result = optimize_fcc_scale(factor, radius=args.cutoff)
    else:
        radius = args.cutoff if args.cutoff is not None else factor * args.scale
        result = fcc_energy_per_particle(args.scale, radius)
    data = {
        "scale": result.scale,
        "cutoff": result.cutoff,
        "density": result.density,
        "energy_per_particle": result.per_particle_energy,
        "tail_bound": result.tail_bound,
        "corrected_energy": result.corrected_energy,
        "stability_lower_bound": result.stability_lower_bound,
    }
    if args.format == "json":
        print(json.dumps(data, indent=2, ensure_ascii=False))
        return 0

    print(f"scale: {result.scale:.10g}  (cutoff {result.cutoff:.6g}, 密度 {result.density:.6g})")
    print(f"1粒子あたり（打ち切り和）: {result.per_particle_energy:.10f}")
    print(f"1粒子あたり（裾の補正後）: {result.corrected_energy:.10f}")
    print(f"B ≥ {result.stability_lower_bound:.2f}")
    return 0


def cmd_optimize(args) -> int:
    """局所最適化コマンド"""
    from ljcert.analysis.optimizer import OptimizerParams, minimize_energy

    q = read_configuration(Path(args.file))
    tol = args.tol if args.tol is not None else settings_store.optimizer_tol
    result = minimize_energy(q, args.seed, OptimizerParams(tol=tol))
    comment = f"E = {result.energy!r}, |grad|_inf = {result.gradient_norm:.3e}, seed = {args.seed}"
    _emit_configuration(result.configuration, args.output, comment)
    print(f"エネルギー: {result.energy:.12g}  最小距離: {min_distance(result.configuration):.6g}", file=sys.stderr)
    return 0 if result.converged else 1


def cmd_compactify(args) -> int:
    """配置の改善手続きコマンド"""
    from ljcert.analysis.compactify import compactify

    q = read_configuration(Path(args.file))
    before = total_energy(q)
    improved = compactify(q)
    after = total_energy(improved)
    d_max, _, _ = diameter(improved)
    _emit_configuration(improved, args.output, f"compactified, E = {after!r}")
    print(f"エネルギー: {before:.12g} → {after:.12g}  最小距離 {min_distance(improved):.6g}  直径 {d_max:.6g}", file=sys.stderr)
    return 0
