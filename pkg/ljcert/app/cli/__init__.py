from typing import TYPE_CHECKING

from .main import main

if TYPE_CHECKING:
    from .parser import build_parser
    from .verify import cmd_verify, cmd_integral
    from .cluster import cmd_energy, cmd_fcc, cmd_optimize, cmd_compactify
    from .config import cmd_config
    from ljcert.infrastructure.settings import settings_store

__all__ = [
    "main",
    "build_parser",
    "cmd_verify",
    "cmd_integral",
    "cmd_energy",
    "cmd_fcc",
    "cmd_optimize",
    "cmd_compactify",
    "cmd_config",
]


def __getattr__(name: str) -> object:
    if name == "build_parser":
        from .parser import build_parser

        return build_parser
    if name in {"cmd_verify", "cmd_integral"}:
        from . import verify

        return getattr(verify, name)
    if name in {"cmd_energy", "cmd_fcc", "cmd_optimize", "cmd_compactify"}:
        from . import cluster

        return getattr(cluster, name)
    if name == "cmd_config":
        from .config import cmd_config

        return cmd_config
    if name == "settings_store":
        from ljcert.infrastructure.settings import settings_store

        return settings_store
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")
