import logging
import sys
from collections.abc import Sequence

from ljcert.utils.errors import LjcertError

from .parser import build_parser

logger = logging.getLogger(__name__)


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    raw = list(sys.argv[1:] if argv is None else argv)

    try:
        if not raw:
            parser.print_help()
            return 0

        try:
            args = parser.parse_args(raw)
        except SystemExit as e:
            return int(e.code or 0)

        if args.verbose:
            logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")

        if args.command == "verify":
            import asyncio
            from .verify import cmd_verify

            return asyncio.run(cmd_verify(args))
        elif args.command == "integral":
            from .verify import cmd_integral

            return cmd_integral(args)
        elif args.command == "energy":
            from .cluster import cmd_energy

            return cmd_energy(args)
        elif args.command == "fcc":
            from .cluster import cmd_fcc

            return cmd_fcc(args)
        elif args.command == "optimize":
            from .cluster import cmd_optimize

            return cmd_optimize(args)
        elif args.command == "compactify":
            from .cluster import cmd_compactify

            return cmd_compactify(args)
        elif args.command == "config":
            from .config import cmd_config

            return cmd_config(args, parser)
        else:
            parser.print_help()
        return 0
    except (LjcertError, OSError) as e:
        print(f"エラー: {e}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        print("\n中断しました。", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
