import sys

from ljcert.infrastructure.settings import settings_store

_KEY_MAP: dict[str, str] = {
    "maxDepth": "maxDepth",
    "max-depth": "maxDepth",
    "enclosureWidth": "enclosureWidth",
    "enclosure-width": "enclosureWidth",
    "jobs": "jobs",
    "optimizerTol": "optimizerTol",
    "optimizer-tol": "optimizerTol",
    "fccCutoffFactor": "fccCutoffFactor",
    "fcc-cutoff-factor": "fccCutoffFactor",
}

_PARSERS = {
    "maxDepth": int,
    "enclosureWidth": str,
    "jobs": int,
    "optimizerTol": float,
    "fccCutoffFactor": float,
}


def cmd_config(args, parser) -> int:
    """設定管理コマンド"""
    if not args.config_subcommand:
        parser.print_help()
        return 0

    if args.config_subcommand == "show":
        print("\n現在の設定:", file=sys.stderr)
        print("-" * 40, file=sys.stderr)
        for k, v in settings_store.get_all().items():
            print(f"{k:<20}: {v}", file=sys.stderr)
        print("-" * 40, file=sys.stderr)
        print(f"設定ファイルパス: {settings_store.config_path}", file=sys.stderr)
        return 0

    raw_key: str = args.key
    if raw_key not in _KEY_MAP:
        allowed = ", ".join(sorted(set(_KEY_MAP.values())))
        print(f"エラー: 不明な設定キー '{raw_key}'。使用可能なキー: {allowed}", file=sys.stderr)
        return 2
    target_key = _KEY_MAP[raw_key]
    try:
        value = _PARSERS[target_key](args.value)
    except ValueError:
        print(f"エラー: {target_key} の値として読めません: {args.value!r}", file=sys.stderr)
        return 2

    settings_store.update({target_key: value}, save=True)
    if settings_store.get(target_key) != value:
        print(f"エラー: {target_key} に {args.value!r} は設定できません", file=sys.stderr)
        return 2
    print(f"設定を更新しました: {target_key}", file=sys.stderr)
    return 0
