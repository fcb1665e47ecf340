from dataclasses import replace

import pytest

from pentaca.errors import Ambiguous, ScenarioError
from pentaca.fixtures import STRUCTURES, TRACES, TRACES_BY_NAME, TRACKS
from pentaca.schemas import CENTER, Scenario, TileCoord
from pentaca.services.coords import get_navigator
from pentaca.services.engine import infer_orientations, simulate
from pentaca.services.rules import RuleTable, is_motion_rule
from pentaca.services.scenarios import (
    builtin,
    builtin_scenarios,
    check_idle,
    controller,
    controller_sensor,
    doubler,
    dump_scenario,
    fixed_switch,
    fork,
    get_scenario,
    horizontal_track,
    idle_configuration,
    load_scenario,
    parse_scenario,
    save_scenario,
    scenario_groups,
    selector,
    vertical_track,
    verify,
)

NAMES = [t.name for t in TRACES]

C = TileCoord.parse


def test_catalogue() -> None:
    assert len(NAMES) == 27
    assert len(set(NAMES)) == 27
    assert len(scenario_groups()) == 20
    assert list(builtin_scenarios()) == NAMES


@pytest.mark.parametrize("name", NAMES)
def test_builtin_scenario_is_reproduced(name: str, table: RuleTable) -> None:
    report = verify(builtin(name), table)
    assert report.error is None
    assert report.mismatches == []
    assert report.passed


@pytest.mark.parametrize(
    "scenario,cell,ids",
    [
        (lambda: vertical_track("down", "simple"), "0(0)", [25, 25, 26, 27, 28, 25]),
        (lambda: vertical_track("down", "double"), "1(2)", [12, 15, 33, 34, 17, 12]),
        (lambda: vertical_track("up", "simple"), "0(0)", [35, 35, 41, 42, 48, 35]),
        (lambda: horizontal_track("black", "ccw", "simple"), "3(1)", [78, 83, 87, 90, 58, 58, 58]),
        (lambda: horizontal_track("black", "cw", "double"), "2(3)", [59, 25, 26, 149, 98, 71, 59]),
        (lambda: horizontal_track("white", "cw", "simple"), "0(0)", [152, 152, 152, 152, 171, 169, 167]),
        (lambda: fixed_switch("left", "simple"), "0(0)", [191, 191, 193, 194, 195, 191]),
        (lambda: fixed_switch("right", "simple"), "0(0)", [191, 191, 200, 194, 195, 191]),
        (lambda: fixed_switch("left", "double"), "0(0)", [191, 193, 197, 198, 195, 191]),
        (lambda: doubler(), "0(0)", [202, 206, 208, 211, 215, 202]),
        (lambda: doubler(), "1(1)", [203, 207, 209, 212, 203, 203]),
        (lambda: fork(), "0(0)", [35, 35, 41, 42, 225, 228]),
        (lambda: fork(), "1(4)", [218, 218, 62, 222, 226, 229]),
        (lambda: selector("simple"), "1(4)", [236, 236, 245, 251, 255, 261]),
        (lambda: selector("simple"), "0(0)", [230, 230, 242, 247, 254, 260]),
        (lambda: selector("double"), "1(2)", [232, 243, 193, 273, 277, 232]),
        (lambda: controller("black", "passage"), "0(0)", [58, 58, 78, 83, 309]),
        (lambda: controller("white", "passage"), "0(0)", [279, 279, 315]),
        (lambda: controller("black", "signal"), "1(1)", [294, 294, 302, 280]),
        (lambda: controller_sensor("white", "passage"), "1(1)", [280, 280, 326, 329, 334, 294]),
        (lambda: controller_sensor("black", "passage"), "1(1)", [294, 294, 345, 294]),
    ],
)
def test_recorded_rows(scenario, cell: str, ids) -> None:
    s = scenario()
    assert s.expected_map()[C(cell)][: len(ids)] == ids


def test_horizontal_columns_start_at_two() -> None:
    s = horizontal_track("black", "ccw", "simple")
    assert s.first_step == 2
    assert s.expected_at(C("3(1)"), 2) == 78
    assert s.expected_at(C("3(1)"), 8) == 58
    assert s.expected_at(C("3(1)"), 1) is None


def test_sensor_signal_matches_controller_signal() -> None:
    sensor = controller_sensor("black", "signal").expected_map()
    control = controller("black", "signal").expected_map()
    shared = set(sensor) & set(control)
    assert shared
    for cell in shared:
        assert sensor[cell] == control[cell]


@pytest.mark.parametrize(
    "call",
    [
        lambda: vertical_track("sideways", "simple"),
        lambda: vertical_track("down", "triple"),
        lambda: horizontal_track("grey", "cw", "simple"),
        lambda: horizontal_track("black", "left", "simple"),
        lambda: fixed_switch("middle", "simple"),
        lambda: doubler("double"),
        lambda: fork("double"),
        lambda: controller("black", "toggle"),
        lambda: controller_sensor("white", "signal"),
        lambda: builtin("no-such-scenario"),
    ],
)
def test_unavailable_variants(call) -> None:
    with pytest.raises(ScenarioError):
        call()


def test_roles_and_locomotive() -> None:
    s = vertical_track("down", "simple")
    roles = {r.cell: r.role for r in s.cells}
    assert set(s.tracked) <= set(roles)
    assert roles[CENTER] == "track"
    assert roles[C("1(2)")] == "milestone"
    assert s.loco is not None and s.loco.kind == "simple"
    assert s.loco.entry == [C("12(1)")]
    assert roles[C("12(1)")] == "track"


def test_controller_state_cell() -> None:
    s = controller("black", "passage")
    roles = {r.cell: r.role for r in s.cells}
    assert roles[C("1(1)")] == "structure"
    assert C("1(1)") in s.initial_black
    assert C("1(1)") not in controller("white", "passage").initial_black


@pytest.mark.parametrize("name", NAMES)
def test_described_milestones_are_in_the_initial_frame(name: str) -> None:
    trace = TRACES_BY_NAME[name]
    blacks = set(builtin(name).initial_black)
    assert {C(c) for c in STRUCTURES[trace.structure].milestones} <= blacks
    assert {C(c) for c in trace.entry.split()} <= blacks


@pytest.mark.parametrize("structure", sorted(STRUCTURES))
def test_runs_of_a_structure_share_it(structure: str, table: RuleTable) -> None:
    cells = frozenset(C(c) for c in STRUCTURES[structure].cells)
    runs = [t for t in TRACES if t.structure == structure]
    assert runs
    for t in runs:
        setting = frozenset(C(c) for c in t.setting.split())
        assert idle_configuration(builtin(t.name), table) == cells | setting


def test_locomotive_moves_one_cell_per_step(table: RuleTable) -> None:
    track = [C(c) for c in TRACKS["vertical-down"]]
    frames = simulate(vertical_track("down", "simple"), table).configurations
    for k in range(1, 6):
        assert [c for c in track if c in frames[k]] == [track[k - 1]]


def test_doubler_makes_a_double_locomotive(table: RuleTable) -> None:
    nav = get_navigator()
    track = [C(c) for c in TRACKS["doubler"]]
    frames = simulate(doubler(), table).configurations
    pairs = [
        (a, b)
        for cfg in frames[1:]
        for i, a in enumerate(track)
        for b in track[i + 1:]
        if a in cfg and b in cfg and b in nav.sides(a)
    ]
    assert pairs


@pytest.mark.parametrize("name", NAMES)
def test_structure_alone_is_a_fixed_point(name: str, table: RuleTable) -> None:
    s = builtin(name)
    idle = idle_configuration(s, table)
    assert idle == frozenset(s.initial_black) - frozenset(s.loco.entry)
    assert check_idle(s, table, steps=10)


def test_verify_reports_idle(table: RuleTable) -> None:
    report = verify(builtin("vertical-down-simple"), table, idle=True)
    assert report.idle_ok is True
    assert report.passed


def test_flipped_rule_breaks_the_going_down_run(table: RuleTable) -> None:
    flipped = table.by_id[26].model_copy(update={"next": "W"})
    report = verify(builtin("vertical-down-simple"), table.with_rules([flipped]))
    assert not report.passed
    assert (CENTER, 2) in [(m.cell, m.step) for m in report.mismatches]


def test_motion_rule_mutations_are_caught(table: RuleTable) -> None:
    used = {}
    for name in NAMES:
        s = builtin(name)
        for row in s.expected:
            for rule_id in row.rules[:-1]:
                if is_motion_rule(table.by_id[rule_id]):
                    used.setdefault(rule_id, name)
    assert len(used) == 60
    for rule_id in sorted(used):
        rule = table.by_id[rule_id]
        flipped = rule.model_copy(update={"next": "B" if rule.next == "W" else "W"})
        report = verify(builtin(used[rule_id]), table.with_rules([flipped]))
        assert not report.passed, rule_id


def test_open_shift_needs_its_pin(table: RuleTable) -> None:
    s = builtin("horizontal-black-cw-double")
    assert s.orientations[C("5(2)")] == 1
    with pytest.raises(Ambiguous) as info:
        infer_orientations(s, table)
    assert C("5(2)") in info.value.cells


def test_builtin_that_does_not_replay(monkeypatch) -> None:
    trace = TRACES_BY_NAME["vertical-down-simple"]
    (cell, ids), *rest = trace.rows
    broken = replace(trace, name="vertical-down-broken", rows=((cell, (25,) + ids[1:]), *rest))
    monkeypatch.setitem(TRACES_BY_NAME, broken.name, broken)
    with pytest.raises(ScenarioError) as info:
        builtin(broken.name)
    assert "does not replay" in str(info.value)


def test_zero_step_scenario_passes(table: RuleTable) -> None:
    s = Scenario(name="empty", steps=0, depth=2)
    assert verify(s, table).passed


@pytest.mark.slow
@pytest.mark.parametrize("name", NAMES)
def test_sparse_and_full_runs_agree(name: str, table: RuleTable) -> None:
    s = builtin(name)
    assert simulate(s, table).configurations == simulate(s, table, full_scan=True).configurations


# -- files ------------------------------------------------------------------


@pytest.mark.parametrize("name", NAMES)
def test_file_round_trip(name: str, tmp_path) -> None:
    s = builtin(name)
    path = tmp_path / f"{name}.scn"
    save_scenario(s, path)
    assert load_scenario(path) == s
    assert get_scenario(path) == s


def test_get_scenario_by_name() -> None:
    assert get_scenario("fork") is builtin("fork")
    with pytest.raises(ScenarioError):
        get_scenario("nowhere/at-all.scn")


def test_tracked_cell_must_be_listed() -> None:
    text = dump_scenario(builtin("fork")).replace("[tracked]\n", "[tracked]\n9(9)\n")
    with pytest.raises(ScenarioError):
        parse_scenario(text)
    text = "[scenario]\nname = x\nsteps = 1\n[cells]\n0(0) track\n[tracked]\n1(1)\n"
    with pytest.raises(ScenarioError) as info:
        parse_scenario(text, "x.scn")
    assert "x.scn" in str(info.value)
    assert "1(1)" in str(info.value)


@pytest.mark.parametrize(
    "text",
    [
        "name = x\n",
        "[scenario]\nname = x\n[bogus]\n",
        "[scenario]\nname\n",
        "[scenario]\nname = x\ncolour = red\n",
        "[scenario]\nname = x\nsteps = many\n",
        "[scenario]\nname = x\n[orientations]\n0(0)\n",
        "[scenario]\nname = x\n[orientations]\n0(0) 7\n",
        "[scenario]\nname = x\nloco = triple\n",
        "[scenario]\nname = x\nloco = double 1(1)\n",
    ],
)
def test_malformed_files(text: str) -> None:
    with pytest.raises(ScenarioError):
        parse_scenario(text)


def test_unknown_rule_id_loads_but_fails(tmp_path, table: RuleTable) -> None:
    s = builtin("fork")
    row = s.expected[0]
    edited = dump_scenario(s).replace(
        " ".join([str(row.cell)] + [str(i) for i in row.rules]),
        " ".join([str(row.cell), "9999"] + [str(i) for i in row.rules[1:]]),
    )
    path = tmp_path / "edited.scn"
    path.write_text(edited, encoding="utf-8")
    loaded = load_scenario(path)
    assert loaded.expected[0].rules[0] == 9999
    assert not verify(loaded, table).passed


def test_unreadable_file(tmp_path) -> None:
    with pytest.raises(ScenarioError):
        load_scenario(tmp_path / "missing.scn")
