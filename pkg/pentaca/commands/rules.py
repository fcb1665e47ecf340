# pentaca\commands\rules.py
import argparse
from collections import Counter
from pathlib import Path

from ..dependencies import common_options, rule_table
from ..services.rules import (
    RULE_FAMILIES,
    TABULATED_CONFLICTS,
    check_determinism,
    find_rotation_conflicts,
    is_motion_rule,
    rule_family,
)


def register(sub: argparse._SubParsersAction) -> None:
    parser = sub.add_parser("rules", help="check and analyse a rule table")
    actions = parser.add_subparsers(dest="action", required=True)
    for name, handler, text in (
        ("check", check, "parse the table and look for determinism conflicts"),
        ("rotations", rotations, "rules contradicting each other under rotation"),
        ("families", families, "rule counts per structure"),
    ):
        p = actions.add_parser(name, help=text, parents=[common_options()])
        p.add_argument("file", type=Path, nargs="?", default=None, help="rule file (default: PENTACA_RULES or the packaged table)")
        p.set_defaults(handler=handler)


def check(args: argparse.Namespace) -> int:
    table = rule_table(args.file)
    conflicts = check_determinism(table)
    print(f"{len(table)} rules, {len(conflicts)} determinism conflicts")
    for c in conflicts:
        print(f"  conflict: rules {c.rule_a} and {c.rule_b}")
    for rule_id in table.duplicate_ids:
        print(f"  duplicate id: {rule_id}")
    return 0 if not conflicts and not table.duplicate_ids else 1


def rotations(args: argparse.Namespace) -> int:
    table = rule_table(args.file)
    found = find_rotation_conflicts(table)
    tabulated = {(a, b): s for a, b, s in TABULATED_CONFLICTS}
    for c in found:
        mark = "" if tabulated.get((c.rule_a, c.rule_b)) == c.shift else "  (not tabulated)"
        print(f"{c.rule_a:>4} {c.rule_b:>4}  shift {c.shift}{mark}")
    seen = {(c.rule_a, c.rule_b, c.shift) for c in found}
    missing = [t for t in TABULATED_CONFLICTS if t not in seen]
    print(f"{len(found)} conflict pairs found; {len(TABULATED_CONFLICTS)} conflict pairs tabulated, {len(TABULATED_CONFLICTS) - len(missing)} of them found")
    for a, b, s in missing:
        print(f"  missing: {a} {b} shift {s}")
    return 0 if not missing else 1


def families(args: argparse.Namespace) -> int:
    table = rule_table(args.file)
    total: Counter = Counter()
    motion: Counter = Counter()
    for rule in table.rules:
        try:
            family = rule_family(rule.id)
        except KeyError:
            family = "other"
        total[family] += 1
        motion[family] += is_motion_rule(rule)
    for name in [f for f, _, _ in RULE_FAMILIES] + ["other"]:
        if total[name]:
            print(f"{name:<18} {total[name]:>4} rules  {motion[name]:>4} motion")
    return 0
