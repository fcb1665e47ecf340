# pentaca\services\rules.py
import logging
from collections import defaultdict
from functools import lru_cache
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Tuple

from ..config import PACKAGED_RULES
from ..errors import RuleParseError
from ..schemas import DeterminismConflict, OrbitMember, RotationConflict, RotationOrbit, Rule

logger = logging.getLogger(__name__)

STATES = ("W", "B")

# Rotation conflicts printed alongside the rule tables: (rule_a, rule_b, shift from a to b).
TABULATED_CONFLICTS: Tuple[Tuple[int, int, int], ...] = (
    (21, 65, 3),
    (30, 287, 3),
    (51, 124, 2),
    (51, 300, 1),
    (80, 252, 3),
    (112, 339, 2),
    (147, 339, 1),
    (202, 242, 2),
    (209, 265, 2),
    (212, 240, 2),
    (226, 250, 4),
    (246, 339, 3),
    (251, 277, 4),
    (256, 302, 4),
)

# id ranges of the structure tables the rules come from
RULE_FAMILIES: Tuple[Tuple[str, int, int], ...] = (
    ("conservative", 1, 10),
    ("vertical", 11, 54),
    ("horizontal", 55, 190),
    ("fixed-switch", 191, 201),
    ("doubler", 202, 217),
    ("fork", 218, 229),
    ("selector", 230, 278),
    ("controller", 279, 316),
    ("controller-sensor", 317, 352),
)


def parse_rule(line: str, line_no: int = 0) -> Rule:
    """`<id> <W|B> <10 of W|B> <W|B>`; any whitespace between fields."""
    fields = line.split()
    if len(fields) != 4:
        raise RuleParseError(line_no, line, f"expected 4 fields, found {len(fields)}")
    raw_id, current, word, nxt = fields
    if not raw_id.isdigit() or int(raw_id) < 1:
        raise RuleParseError(line_no, line, "rule id must be a positive integer")
    if current not in STATES or nxt not in STATES:
        raise RuleParseError(line_no, line, "cell states must be W or B")
    if len(word) != 10 or any(ch not in STATES for ch in word):
        raise RuleParseError(line_no, line, "neighbourhood must be exactly 10 letters W/B")
    return Rule(id=int(raw_id), current=current, word=word, next=nxt)


class RuleTable:
    """Rules plus the exact-match index (current, word) -> rule."""

    def __init__(self, rules: Iterable[Rule], source: Optional[str] = None):
        self.rules: List[Rule] = list(rules)
        self.source = source
        self.by_id: Dict[int, Rule] = {}
        self.index: Dict[Tuple[str, str], Rule] = {}
        self.duplicate_ids: List[int] = []
        for rule in self.rules:
            if rule.id in self.by_id:
                self.duplicate_ids.append(rule.id)
            self.by_id.setdefault(rule.id, rule)
            self.index.setdefault((rule.current, rule.word), rule)

    def __len__(self) -> int:
        return len(self.rules)

    def lookup(self, current: str, word: str) -> Optional[Rule]:
        return self.index.get((current, word))

    def with_rules(self, rules: Iterable[Rule]) -> "RuleTable":
        """Copy of the table with the given rules replacing those of the same id."""
        swap = {r.id: r for r in rules}
        return RuleTable([swap.get(r.id, r) for r in self.rules], source=self.source)


def parse_rules(text: str, source: Optional[str] = None) -> RuleTable:
    rules = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        rules.append(parse_rule(line, line_no))
    return RuleTable(rules, source=source)


def load_rules(path: Path) -> RuleTable:
    path = Path(path)
    table = parse_rules(path.read_text(encoding="utf-8"), source=str(path))
    logger.info("loaded %d rules from %s", len(table), path)
    return table


@lru_cache
def shipped_rules() -> RuleTable:
    """The packaged 352-rule table the built-in scenarios are recorded against."""
    return load_rules(PACKAGED_RULES)


def check_determinism(table: RuleTable) -> List[DeterminismConflict]:
    """Pairs sharing (current, word) but disagreeing on the new state."""
    seen: Dict[Tuple[str, str], List[Rule]] = defaultdict(list)
    for rule in table.rules:
        seen[(rule.current, rule.word)].append(rule)
    conflicts = []
    for group in seen.values():
        for i, a in enumerate(group):
            for b in group[i + 1:]:
                if a.next != b.next:
                    lo, hi = sorted((a.id, b.id))
                    conflicts.append(DeterminismConflict(rule_a=lo, rule_b=hi))
    return sorted(conflicts, key=lambda c: (c.rule_a, c.rule_b))


def rotate_word(word: str, shift: int) -> str:
    """Position i in 1..5 moves to ((i-1+shift) mod 5)+1; vertices 6..10 likewise."""
    shift %= 5
    out = [""] * 10
    for i in range(5):
        out[(i + shift) % 5] = word[i]
        out[5 + (i + shift) % 5] = word[5 + i]
    return "".join(out)


def canonical_word(word: str) -> Tuple[str, int]:
    """Least rotation of the word and the shift producing it."""
    return min((rotate_word(word, s), s) for s in range(5))


def rotation_shift(word_a: str, word_b: str) -> Optional[int]:
    """Smallest shift s with rotate_word(word_a, s) == word_b, if any."""
    for s in range(5):
        if rotate_word(word_a, s) == word_b:
            return s
    return None


def rotation_orbits(table: RuleTable) -> List[RotationOrbit]:
    groups: Dict[Tuple[str, str], List[Rule]] = defaultdict(list)
    for rule in table.rules:
        groups[(rule.current, canonical_word(rule.word)[0])].append(rule)
    orbits = []
    for (current, _), rules in groups.items():
        rules.sort(key=lambda r: r.id)
        base = rules[0]
        members = [OrbitMember(rule_id=r.id, shift=rotation_shift(base.word, r.word)) for r in rules]
        orbits.append(RotationOrbit(current=current, members=members))
    return sorted(orbits, key=lambda o: o.members[0].rule_id)


def orbit_of(table: RuleTable, rule_id: int) -> RotationOrbit:
    for orbit in rotation_orbits(table):
        if rule_id in orbit.ids:
            return orbit
    raise KeyError(rule_id)


def find_rotation_conflicts(table: RuleTable) -> List[RotationConflict]:
    """Rules on rotated neighbourhoods with the same state but different outcomes."""
    conflicts = set()
    for orbit in rotation_orbits(table):
        rules = [table.by_id[m.rule_id] for m in orbit.members]
        for i, a in enumerate(rules):
            for b in rules[i + 1:]:
                if a.next != b.next:
                    conflicts.add(RotationConflict(rule_a=a.id, rule_b=b.id, shift=rotation_shift(a.word, b.word)))
    return sorted(conflicts, key=lambda c: (c.rule_a, c.rule_b))


def rule_family(rule_id: int) -> str:
    for name, lo, hi in RULE_FAMILIES:
        if lo <= rule_id <= hi:
            return name
    raise KeyError(f"rule {rule_id} belongs to no structure table")


def is_motion_rule(rule: Rule) -> bool:
    return rule.current != rule.next
