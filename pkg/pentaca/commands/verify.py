# pentaca\commands\verify.py
import argparse
import logging
from typing import List

from ..dependencies import common_options, rule_table, rules_option
from ..errors import PentacaError
from ..schemas import VerifyReport
from ..services.rules import RuleTable
from ..services.scenarios import builtin, get_scenario, scenario_groups
from ..services.scenarios import verify as verify_scenario

logger = logging.getLogger(__name__)


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("verify", help="compare a run with its recorded rule ids", parents=[common_options()])
    rules_option(parser)
    which = parser.add_mutually_exclusive_group(required=True)
    which.add_argument("--scenario", help="built-in scenario name or scenario file")
    which.add_argument("--all", action="store_true", help="every built-in scenario, one line per trace table")
    parser.add_argument("--idle", action="store_true", help="also check that the structure alone is a fixed point")
    parser.set_defaults(handler=verify)


def _report(name: str, table: RuleTable, idle: bool) -> VerifyReport:
    try:
        scenario = builtin(name)
    except PentacaError as exc:
        logger.warning("%s: %s", name, exc)
        return VerifyReport(scenario=name, group="", error=str(exc))
    return verify_scenario(scenario, table, idle=idle)


def _details(report: VerifyReport) -> List[str]:
    lines = []
    if report.error:
        lines.append(f"    error: {report.error}")
    for m in report.mismatches:
        lines.append(f"    {m.cell} step {m.step}: expected {m.expected}, applied {m.actual}")
    if report.idle_ok is False:
        lines.append("    idle structure is not a fixed point")
    return lines


def verify(args: argparse.Namespace) -> int:
    table = rule_table(args.rules)
    if not args.all:
        report = verify_scenario(get_scenario(args.scenario), table, idle=args.idle)
        print(f"{'PASS' if report.passed else 'FAIL'}  {report.scenario}")
        for line in _details(report):
            print(line)
        return 0 if report.passed else 1

    failed = 0
    for group, names in scenario_groups().items():
        reports = [_report(name, table, args.idle) for name in names]
        ok = all(r.passed for r in reports)
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {group}")
        for r in reports:
            if args.verbose or not r.passed:
                print(f"  {'pass' if r.passed else 'fail'}  {r.scenario}")
                for line in _details(r):
                    print(line)
    print(f"{len(scenario_groups()) - failed} of {len(scenario_groups())} trace tables reproduced")
    return 0 if not failed else 1
