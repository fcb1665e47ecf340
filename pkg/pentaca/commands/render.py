# pentaca\commands\render.py
import argparse
from pathlib import Path

from ..dependencies import common_options, rule_table, rules_option
from ..schemas import RenderStyle
from ..services.render import render_run
from ..services.scenarios import get_scenario


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("render", help="write one SVG per step of a scenario", parents=[common_options()])
    rules_option(parser)
    parser.add_argument("--scenario", required=True, help="built-in scenario name or scenario file")
    parser.add_argument("--steps", type=int, default=None, help="number of frames (default: the scenario's steps)")
    parser.add_argument("--out-dir", type=Path, required=True, help="directory receiving frame_000.svg, frame_001.svg, ...")
    parser.add_argument("--labels", action="store_true", help="print the coordinate of every mapped tile")
    parser.set_defaults(handler=render)


def render(args: argparse.Namespace) -> int:
    table = rule_table(args.rules)
    scenario = get_scenario(args.scenario)
    frames = render_run(scenario, table, args.steps, RenderStyle(labels=args.labels))
    args.out_dir.mkdir(parents=True, exist_ok=True)
    for k, svg in enumerate(frames):
        (args.out_dir / f"frame_{k:03d}.svg").write_text(svg, encoding="utf-8")
    print(f"wrote {len(frames)} frames to {args.out_dir}")
    return 0
