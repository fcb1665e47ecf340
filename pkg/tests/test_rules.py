import pytest
from hypothesis import given
from hypothesis import strategies as st

from pentaca.errors import RuleParseError
from pentaca.schemas import Rule
from pentaca.services.rules import (
    TABULATED_CONFLICTS,
    RuleTable,
    canonical_word,
    check_determinism,
    find_rotation_conflicts,
    is_motion_rule,
    orbit_of,
    parse_rule,
    parse_rules,
    rotate_word,
    rotation_orbits,
    rule_family,
)

words = st.text(alphabet="WB", min_size=10, max_size=10)


def test_shipped_table_parses(table: RuleTable) -> None:
    assert len(table) == 352
    assert sorted(table.by_id) == list(range(1, 353))
    assert not table.duplicate_ids


def test_shipped_table_is_deterministic(table: RuleTable) -> None:
    assert check_determinism(table) == []


def test_lookup(table: RuleTable) -> None:
    assert table.lookup("W", "W" * 10).id == 1
    assert table.lookup("W", "WBWBBBWWBB").id == 26
    assert table.lookup("B", "W" * 10).id == 2
    assert table.lookup("B", "B" * 10) is None


def test_parse_rule_fields() -> None:
    rule = parse_rule("26 W WBWBBBWWBB B")
    assert (rule.id, rule.current, rule.word, rule.next) == (26, "W", "WBWBBBWWBB", "B")
    assert str(rule).startswith("26")


@pytest.mark.parametrize(
    "line",
    [
        "26 W WBWBBBWWBB",
        "x W WBWBBBWWBB B",
        "0 W WBWBBBWWBB B",
        "26 G WBWBBBWWBB B",
        "26 W WBWBBBWWB B",
        "26 W WBWBBBWWBX B",
    ],
)
def test_parse_rule_rejects(line: str) -> None:
    with pytest.raises(RuleParseError):
        parse_rule(line, 7)


def test_parse_rules_reports_the_line() -> None:
    with pytest.raises(RuleParseError) as info:
        parse_rules("# header\n1 W WWWWWWWWWW W\n\n2 W WWWW W\n")
    assert info.value.line_no == 4


def test_determinism_conflict_is_found() -> None:
    t = parse_rules("1 W WWWWWWWWWW W\n2 W WWWWWWWWWW B\n3 W WWWWWWWWWW W\n")
    pairs = [(c.rule_a, c.rule_b) for c in check_determinism(t)]
    assert pairs == [(1, 2), (2, 3)]


def test_rotate_word_moves_positions() -> None:
    assert rotate_word("BWWWWWWWWW", 1) == "WBWWWWWWWW"
    assert rotate_word("WWWWBWWWWW", 1) == "BWWWWWWWWW"
    assert rotate_word("WWWWWBWWWW", 2) == "WWWWWWWBWW"


@given(words, st.integers(0, 4), st.integers(0, 4))
def test_rotations_form_a_group(word: str, a: int, b: int) -> None:
    assert rotate_word(rotate_word(word, a), b) == rotate_word(word, a + b)
    assert rotate_word(word, 5) == word
    assert rotate_word(rotate_word(word, a), 5 - a) == word


@given(words, st.integers(0, 4))
def test_canonical_word_is_rotation_invariant(word: str, s: int) -> None:
    assert canonical_word(rotate_word(word, s))[0] == canonical_word(word)[0]


def test_orbit_of_rule_16(table: RuleTable) -> None:
    orbit = orbit_of(table, 16)
    shifts = {m.rule_id: m.shift for m in orbit.members}
    assert {16: 0, 81: 3, 93: 2, 136: 4, 320: 1}.items() <= shifts.items()
    assert orbit.current == "B"


def test_orbits_partition_the_table(table: RuleTable) -> None:
    ids = [i for orbit in rotation_orbits(table) for i in orbit.ids]
    assert sorted(ids) == list(range(1, 353))


def test_rotation_conflicts(table: RuleTable) -> None:
    found = {(c.rule_a, c.rule_b, c.shift) for c in find_rotation_conflicts(table)}
    assert set(TABULATED_CONFLICTS) <= found
    assert len(TABULATED_CONFLICTS) == 14
    assert found - set(TABULATED_CONFLICTS) == {(130, 298, 3), (142, 349, 4), (287, 342, 4), (298, 303, 1)}
    for anchor in [(21, 65, 3), (147, 339, 1), (251, 277, 4)]:
        assert anchor in found


def test_conflicting_rules_really_disagree(table: RuleTable) -> None:
    for c in find_rotation_conflicts(table):
        a, b = table.by_id[c.rule_a], table.by_id[c.rule_b]
        assert a.current == b.current
        assert a.next != b.next
        assert rotate_word(a.word, c.shift) == b.word


@pytest.mark.parametrize(
    "rule_id,family",
    [(1, "conservative"), (25, "vertical"), (58, "horizontal"), (191, "fixed-switch"), (202, "doubler"),
     (225, "fork"), (230, "selector"), (309, "controller"), (352, "controller-sensor")],
)
def test_rule_family(rule_id: int, family: str) -> None:
    assert rule_family(rule_id) == family


def test_rule_family_unknown() -> None:
    with pytest.raises(KeyError):
        rule_family(353)


def test_motion_rules(table: RuleTable) -> None:
    assert is_motion_rule(table.by_id[26])
    assert not is_motion_rule(table.by_id[25])
    assert not is_motion_rule(table.by_id[1])


def test_with_rules_replaces_by_id(table: RuleTable) -> None:
    flipped = table.by_id[26].model_copy(update={"next": "W"})
    mutated = table.with_rules([flipped])
    assert mutated.by_id[26].next == "W"
    assert table.by_id[26].next == "B"
    assert len(mutated) == len(table)
    assert mutated.lookup("W", "WBWBBBWWBB").next == "W"


def test_rule_model_is_frozen() -> None:
    rule = Rule(id=1, current="W", word="W" * 10, next="W")
    with pytest.raises(Exception):
        rule.next = "B"
