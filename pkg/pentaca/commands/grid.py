# pentaca\commands\grid.py
import argparse
from pathlib import Path

from ..config import get_settings
from ..dependencies import common_options
from ..services.geometry import MAX_RADIUS, build_patch, dump_patch


def _radius(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if not 0 <= value <= MAX_RADIUS:
        raise argparse.ArgumentTypeError(f"radius must be in 0..{MAX_RADIUS}")
    return value


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("grid", help="geometric patches of the pentagrid")
    actions = parser.add_subparsers(dest="action", required=True)
    gen = actions.add_parser("gen", help="dump the tiles within --radius reflections of the centre", parents=[common_options()])
    gen.add_argument("--radius", type=_radius, default=None, help="reflections from the central tile (default: PATCH_RADIUS)")
    gen.add_argument("--out", type=Path, default=None, help="write the dump here instead of stdout")
    gen.set_defaults(handler=generate)


def generate(args: argparse.Namespace) -> int:
    radius = args.radius if args.radius is not None else get_settings().patch_radius
    text = dump_patch(build_patch(radius))
    if args.out is None:
        print(text, end="")
    else:
        args.out.write_text(text, encoding="utf-8")
    return 0
