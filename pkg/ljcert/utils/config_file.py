"""
粒子配置ファイルの読み書き

1行に1粒子、空白区切りの3つの10進数。'#' で始まる行と空行は無視する。
書き出しは repr による往復可能な浮動小数点表記。
"""

import math
from pathlib import Path

from ljcert.analysis.cluster import Configuration
from ljcert.utils.errors import ConfigurationFormatError


def parse_configuration(text: str) -> Configuration:
    points: list[tuple[float, float, float]] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ConfigurationFormatError(f"座標は3つ必要です（{len(fields)} 個）: {line!r}", number)
        try:
            x, y, z = (float(f) for f in fields)
        except ValueError:
            raise ConfigurationFormatError(f"数値として読めません: {line!r}", number) from None
        if not all(math.isfinite(v) for v in (x, y, z)):
            raise ConfigurationFormatError(f"有限でない座標です: {line!r}", number)
        points.append((x, y, z))
    if not points:
        raise ConfigurationFormatError("粒子が1つもありません", 0)
    return Configuration(points)


def read_configuration(path: Path) -> Configuration:
    return parse_configuration(Path(path).read_text(encoding="utf-8"))


def format_configuration(q: Configuration, comment: str | None = None) -> str:
    lines = [f"# {comment}"] if comment else []
    lines += [" ".join(repr(float(v)) for v in p) for p in q.points]
    return "\n".join(lines) + "\n"


def write_configuration(path: Path, q: Configuration, comment: str | None = None) -> None:
    Path(path).write_text(format_configuration(q, comment), encoding="utf-8")
