# pentaca\commands\scenario.py
import argparse
from pathlib import Path

from ..dependencies import common_options
from ..services.scenarios import builtin, dump_scenario, save_scenario, scenario_groups


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("scenario", help="built-in scenarios")
    actions = parser.add_subparsers(dest="action", required=True)
    lister = actions.add_parser("list", help="names of the built-in scenarios, by trace table", parents=[common_options()])
    lister.set_defaults(handler=list_scenarios)
    export = actions.add_parser("export", help="write a built-in scenario as an editable file", parents=[common_options()])
    export.add_argument("name")
    export.add_argument("--out", type=Path, default=None, help="file to write (default: stdout)")
    export.set_defaults(handler=export_scenario)


def list_scenarios(args: argparse.Namespace) -> int:
    for group, names in scenario_groups().items():
        print(f"{group}: {' '.join(names)}")
    return 0


def export_scenario(args: argparse.Namespace) -> int:
    scenario = builtin(args.name)
    if args.out is None:
        print(dump_scenario(scenario), end="")
    else:
        save_scenario(scenario, args.out)
    return 0
