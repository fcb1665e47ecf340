# pentaca\main.py
import argparse
import logging
import sys
from typing import List, Optional

from . import __version__
from .commands import GROUPS
from .config import get_settings
from .errors import Ambiguous, BoundaryBreach, NoFit, PentacaError, RunError

logger = logging.getLogger("pentaca")

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3

# the search or the window gave way, not the input
INTERNAL_ERRORS = (NoFit, Ambiguous, BoundaryBreach)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pentaca",
        description="Two-state cellular automaton on the pentagrid: rule checks, runs, verification and rendering.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)
    for group in GROUPS:
        group.register(sub)
    return parser


def exit_code(exc: BaseException) -> int:
    cause = exc.cause if isinstance(exc, RunError) else exc
    if isinstance(cause, INTERNAL_ERRORS) or isinstance(exc.__cause__, INTERNAL_ERRORS):
        return EXIT_INTERNAL
    if isinstance(exc, (PentacaError, OSError)):
        return EXIT_INPUT
    return EXIT_INTERNAL


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    settings = get_settings()
    level = logging.DEBUG if getattr(args, "verbose", False) else getattr(logging, settings.log_level.upper(), logging.INFO)
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        return args.handler(args)
    except Exception as exc:
        code = exit_code(exc)
        if code == EXIT_INTERNAL and not isinstance(exc, PentacaError):
            logger.exception("unexpected failure")
        print(f"pentaca: {exc}", file=sys.stderr)
        return code


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
