import argparse
from fractions import Fraction

from ljcert import __version__
from ljcert.constants.numerics import FCC_DEFAULT_CUTOFF_FACTOR, OPTIMIZER_DEFAULT_TOL

PROPOSITION_CHOICES: dict[str, str | None] = {
    "all": None,
    "2.4": "2.4",
    "2.5": "2.5",
    "3.1i": "3.1-I",
    "3.1ii": "3.1-II",
    "3.3": "3.3",
    "4.1": "4.1",
    "5.1": "5.1",
    "appendix": "appendix",
}


def _fraction(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"有理数として読めません: {text!r}") from None
    return value


def _positive_fraction(text: str) -> Fraction:
    value = _fraction(text)
    if value <= 0:
        raise argparse.ArgumentTypeError(f"正の値を指定してください: {text!r}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"整数として読めません: {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"0 以上を指定してください: {text!r}")
    return value


def _positive_int(text: str) -> int:
    value = _non_negative_int(text)
    if value == 0:
        raise argparse.ArgumentTypeError("1 以上を指定してください")
    return value


def build_parser() -> argparse.ArgumentParser:
    """CLIパーサーを構築します。"""
    parser = argparse.ArgumentParser(prog="ljcert", description="LJCERT: Lennard-Jones 安定性定数の検証付き計算 CLI")
    parser.add_argument("--version", action="version", version=f"LJCERT {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="デバッグログを標準エラーに出す")
    subparsers = parser.add_subparsers(dest="command", help="サブコマンド")

    # verify
    verify_parser = subparsers.add_parser("verify", help="命題の不等式を検証")
    verify_parser.add_argument("--prop", choices=list(PROPOSITION_CHOICES), default="all", help="検証する命題（依存先も実行）")
    verify_parser.add_argument("--format", choices=["text", "json"], default="text", help="出力形式")
    verify_parser.add_argument("--jobs", type=_positive_int, help="並列数（デフォルト: 設定値または 1）")
    verify_parser.add_argument("--max-depth", dest="max_depth", type=_non_negative_int, help="二分法の最大深さ")
    verify_parser.add_argument(
        "--enclosure-width", dest="enclosure_width", type=_positive_fraction, help="π, s, A の包含区間の幅（有理数、例: 1/100000000000000000000）"
    )
    verify_parser.add_argument("--with-fcc", dest="with_fcc", action="store_true", help="要約に FCC 格子和による下界を加える")
    verify_parser.add_argument("--timestamp", action="store_true", help="出力に生成日時を含める")

    # integral
    integral_parser = subparsers.add_parser("integral", help="∫_lower^∞ θ(w) w² dw の包含区間")
    integral_parser.add_argument("--lower", type=_fraction, default=Fraction(0), help="積分の下端（デフォルト: 0）")
    integral_parser.add_argument("--format", choices=["text", "json"], default="text", help="出力形式")

    # energy
    energy_parser = subparsers.add_parser("energy", help="配置ファイルのエネルギーと距離")
    energy_parser.add_argument("file", help="配置ファイル（1行に x y z）")
    energy_parser.add_argument("--format", choices=["text", "json"], default="text", help="出力形式")

    # fcc
    fcc_parser = subparsers.add_parser("fcc", help="FCC 格子和による安定性定数の下界")
    fcc_parser.add_argument("--scale", type=float, default=1.0, help="最近接距離（デフォルト: 1.0）")
    fcc_parser.add_argument(
        "--cutoff", type=float, help=f"打ち切り半径（デフォルト: scale × 設定の倍率、既定の倍率は {FCC_DEFAULT_CUTOFF_FACTOR}）"
    )
    fcc_parser.add_argument("--optimize-scale", dest="optimize_scale", action="store_true", help="補正後エネルギー最小の scale を探索")
    fcc_parser.add_argument("--format", choices=["text", "json"], default="text", help="出力形式")

    # optimize
    optimize_parser = subparsers.add_parser("optimize", help="配置を局所最適化")
    optimize_parser.add_argument("file", help="配置ファイル")
    optimize_parser.add_argument("--seed", type=int, default=0, help="初期摂動の乱数シード")
    optimize_parser.add_argument("--tol", type=float, help=f"勾配の最大ノルムの許容値（デフォルト: 設定値または {OPTIMIZER_DEFAULT_TOL}）")
    optimize_parser.add_argument("--output", "-o", help="出力先（省略時は標準出力）")

    # compactify
    compactify_parser = subparsers.add_parser("compactify", help="0.65 ≤ d ≤ 2(n−1) を満たす配置へ変換")
    compactify_parser.add_argument("file", help="配置ファイル")
    compactify_parser.add_argument("--output", "-o", help="出力先（省略時は標準出力）")

    # config
    config_parser = subparsers.add_parser("config", help="設定の表示・変更")
    config_sub = config_parser.add_subparsers(dest="config_subcommand", help="設定サブコマンド")
    config_sub.add_parser("show", help="設定を表示")
    set_parser = config_sub.add_parser("set", help="値を設定")
    set_parser.add_argument("key", help="設定キー (max-depth 等)")
    set_parser.add_argument("value", help="設定値")

    return parser
