# pentaca\commands\run.py
import argparse
from pathlib import Path

from ..dependencies import common_options, rule_table, rules_option
from ..services.engine import simulate, write_trace_tsv
from ..services.scenarios import get_scenario


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("run", help="run a scenario and print its configurations", parents=[common_options()])
    rules_option(parser)
    parser.add_argument("--scenario", required=True, help="built-in scenario name or scenario file")
    parser.add_argument("--steps", type=int, default=None, help="number of steps (default: the scenario's)")
    parser.add_argument("--trace", type=Path, default=None, help="write the tracked cells' rules as TSV ('-' for stdout)")
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> int:
    table = rule_table(args.rules)
    scenario = get_scenario(args.scenario)
    result = simulate(scenario, table, args.steps)
    for k, cfg in enumerate(result.configurations):
        cells = " ".join(str(c) for c in sorted(cfg))
        print(f"{scenario.first_step + k}\t{len(cfg)}\t{cells}")
    if args.trace is not None:
        tsv = write_trace_tsv(result.traces, table)
        if str(args.trace) == "-":
            print(tsv, end="")
        else:
            args.trace.write_text(tsv, encoding="utf-8")
    return 0
