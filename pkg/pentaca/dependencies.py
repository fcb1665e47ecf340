# pentaca\dependencies.py
import argparse
from pathlib import Path
from typing import Optional

from .config import PACKAGED_RULES, Settings, get_settings, rules_path
from .services.rules import RuleTable, load_rules, shipped_rules


def rule_table(path: Optional[Path] = None, settings: Optional[Settings] = None) -> RuleTable:
    """The table named by --rules or PENTACA_RULES, else the packaged one."""
    resolved = Path(rules_path(path, settings or get_settings())).resolve()
    if resolved == PACKAGED_RULES:
        return shipped_rules()
    return load_rules(resolved)


def rules_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--rules", type=Path, default=None, help="rule file (default: PENTACA_RULES or the packaged table)")


def common_options() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    return parent
