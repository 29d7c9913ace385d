import json
import logging
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any

from ljcert.constants.numerics import (
    DEFAULT_ENCLOSURE_WIDTH,
    DEFAULT_MAX_DEPTH,
    FCC_DEFAULT_CUTOFF_FACTOR,
    FCC_MIN_CUTOFF_FACTOR,
    OPTIMIZER_DEFAULT_TOL,
)
from ljcert.infrastructure.user_paths import default_config_path

logger = logging.getLogger(__name__)


def _int_at_least(minimum: int) -> Callable[[Any], bool]:
    return lambda v: isinstance(v, int) and not isinstance(v, bool) and v >= minimum


def _positive_float(v: Any) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and v > 0


def _positive_rational(v: Any) -> bool:
    if not isinstance(v, str):
        return False
    try:
        return Fraction(v) > 0
    except (ValueError, ZeroDivisionError):
        return False


def _cutoff_factor(v: Any) -> bool:
    return _positive_float(v) and v >= FCC_MIN_CUTOFF_FACTOR


_DEFAULTS: dict[str, Any] = {
    "maxDepth": DEFAULT_MAX_DEPTH,
    "enclosureWidth": str(DEFAULT_ENCLOSURE_WIDTH),
    "jobs": 1,
    "optimizerTol": OPTIMIZER_DEFAULT_TOL,
    "fccCutoffFactor": FCC_DEFAULT_CUTOFF_FACTOR,
}

_VALIDATORS: dict[str, Callable[[Any], bool]] = {
    "maxDepth": _int_at_least(0),
    "enclosureWidth": _positive_rational,
    "jobs": _int_at_least(1),
    "optimizerTol": _positive_float,
    "fccCutoffFactor": _cutoff_factor,
}


class SettingsStore:
    """
    設定ストア（メモリ上で設定を保持）

    CLI フラグを省略したときの既定値を config.json から読み込みます。
    読み込みは最初の参照時に1回だけ行い、save() を呼ぶまでファイルには書きません。
    """

    def __init__(self, config_path: Path | None = None):
        self._config_path = config_path
        self._settings: dict[str, Any] = dict(_DEFAULTS)
        self._loaded = False

    @property
    def config_path(self) -> Path:
        return self._config_path or default_config_path()

    def _ensure_loaded(self) -> None:
        if not self._loaded:
            self._loaded = True
            self._load_from_file(self.config_path)

    def _load_from_file(self, config_path: Path) -> None:
        if not config_path.exists():
            logger.debug(f"設定ファイルがありません: {config_path}。既定値を使います。")
            return

        try:
            with open(config_path, "r", encoding="utf-8") as f:
                config_data = json.load(f)
            if not isinstance(config_data, dict):
                raise ValueError("トップレベルがオブジェクトではありません")
        except (OSError, ValueError) as e:
            try:
                backup_path = config_path.with_suffix(".json.bak")
                config_path.rename(backup_path)
                logger.warning(f"設定ファイルが破損しています。バックアップを作成しました: {backup_path}")
            except OSError:
                pass
            logger.error(f"設定の読み込みに失敗しました {config_path}: {e}")
            return

        for key, validate in _VALIDATORS.items():
            if key not in config_data:
                continue
            val = config_data[key]
            if validate(val):
                self._settings[key] = val
            else:
                logger.warning(f"{key} の値が不正です ({val!r})。デフォルト値 {self._settings[key]!r} を使用します。")
        unknown = sorted(set(config_data) - set(_VALIDATORS))
        if unknown:
            logger.warning(f"未知の設定キーを無視します: {', '.join(unknown)}")
        logger.info(f"設定を読み込みました: {config_path}")

    def save(self) -> bool:
        """現在の設定を config.json に保存します。"""
        try:
            self.config_path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.config_path, "w", encoding="utf-8") as f:
                json.dump(self.get_all(), f, indent=2, ensure_ascii=False)
            return True
        except OSError as e:
            logger.error(f"設定の保存に失敗しました {self.config_path}: {e}")
            return False

    def update(self, settings: dict[str, Any], save: bool = False) -> None:
        """
        設定を一括更新します。不正な値のキーは無視して警告します。

        Args:
            settings: 更新する設定の辞書
            save: ファイルに即座に保存するか
        """
        self._ensure_loaded()
        for key, val in settings.items():
            validate = _VALIDATORS.get(key)
            if validate is None or not validate(val):
                logger.warning(f"設定 {key}={val!r} は受け付けられません")
                continue
            self._settings[key] = val
        if save:
            self.save()

    def get(self, key: str, default: Any = None) -> Any:
        self._ensure_loaded()
        return self._settings.get(key, default)

    def get_all(self) -> dict[str, Any]:
        self._ensure_loaded()
        return self._settings.copy()

    @property
    def max_depth(self) -> int:
        return int(self.get("maxDepth"))

    @property
    def enclosure_width(self) -> Fraction:
        return Fraction(self.get("enclosureWidth"))

    @property
    def jobs(self) -> int:
        return int(self.get("jobs"))

    @property
    def optimizer_tol(self) -> float:
        return float(self.get("optimizerTol"))

    @property
    def fcc_cutoff_factor(self) -> float:
        return float(self.get("fccCutoffFactor"))


# グローバル設定インスタンス
settings_store = SettingsStore()
