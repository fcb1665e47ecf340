import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pentaca.errors import BoundaryBreach, BoundaryError, NoRule, RunError
from pentaca.schemas import CENTER, Scenario, StepTrace, TileCoord
from pentaca.services.coords import get_navigator
from pentaca.services.engine import (
    EMPTY,
    Window,
    apply_rule,
    covering_depth,
    full_step,
    infer_orientations,
    neighborhood_word,
    simulate,
    step,
    write_trace_tsv,
)
from pentaca.services.rules import RuleTable, parse_rules, rotate_word
from pentaca.services.scenarios import builtin

NEAR_CENTER = sorted(get_navigator().ball({CENTER}, 2))


def _lone_center(**extra) -> Scenario:
    return Scenario(name="lone", cells=[{"cell": "0(0)", "role": "track"}], initial_black=["0(0)"], depth=4, **extra)


def test_window_interior() -> None:
    assert Window(2).is_interior(CENTER)
    assert not Window(1).is_interior(CENTER)
    assert Window(2).interior_cells() == [CENTER]
    assert not Window(4).contains(TileCoord(1, 200))


def test_window_breach() -> None:
    with pytest.raises(BoundaryBreach) as info:
        Window(2).check(frozenset({TileCoord(1, 2)}))
    assert info.value.cells == [TileCoord(1, 2)]
    Window(4).check(frozenset({CENTER}))


def test_word_outside_the_interior() -> None:
    with pytest.raises(BoundaryError):
        neighborhood_word(CENTER, EMPTY, {}, Window(1))


def test_word_reads_the_neighbours() -> None:
    cfg = frozenset({TileCoord(1, 1), TileCoord(1, 2)})
    assert neighborhood_word(CENTER, cfg, {}) == "BWWWWBWWWW"
    assert neighborhood_word(CENTER, cfg, {CENTER: 1}) == "WWWWBWWWWB"


@settings(max_examples=50)
@given(st.sets(st.sampled_from(NEAR_CENTER)), st.integers(0, 4))
def test_orientation_rotates_the_word(blacks, shift: int) -> None:
    cfg = frozenset(blacks)
    turned = neighborhood_word(CENTER, cfg, {CENTER: shift})
    assert rotate_word(turned, shift) == neighborhood_word(CENTER, cfg, {})


def test_quiescent_step(table: RuleTable) -> None:
    nxt, trace = step(EMPTY, table, {}, [CENTER], Window(3), 4)
    assert nxt == EMPTY
    assert trace == StepTrace(step=4, applied={CENTER: 1})


def test_missing_rule() -> None:
    t = parse_rules("1 W WWWWWWWWWW W\n")
    with pytest.raises(NoRule) as info:
        apply_rule(CENTER, frozenset({CENTER}), t, {}, Window(4))
    assert info.value.word == "W" * 10
    assert info.value.state == "B"


def test_run_error_carries_the_step() -> None:
    t = parse_rules("1 W WWWWWWWWWW W\n")
    with pytest.raises(RunError) as info:
        simulate(_lone_center(steps=3, first_step=2), t)
    assert info.value.step == 2
    assert isinstance(info.value.cause, NoRule)
    assert info.value.cause.step == 2


def test_lone_milestone_stays(table: RuleTable) -> None:
    # rule 2 keeps an isolated black cell; rule 1 leaves white cells alone
    t = parse_rules("1 W WWWWWWWWWW W\n2 B WWWWWWWWWW B\n" + "".join(
        f"{100 + k} W {''.join('B' if i == k else 'W' for i in range(10))} W\n" for k in range(10)
    ))
    result = simulate(_lone_center(steps=3, tracked=["0(0)"]), t)
    assert result.configurations == [frozenset({CENTER})] * 4
    assert [tr.applied[CENTER] for tr in result.traces] == [2, 2, 2]


def test_sparse_and_full_steps_agree_on_a_small_case() -> None:
    t = parse_rules("1 W WWWWWWWWWW W\n2 B WWWWWWWWWW B\n" + "".join(
        f"{100 + k} W {''.join('B' if i == k else 'W' for i in range(10))} {'B' if k == 0 else 'W'}\n" for k in range(10)
    ))
    window = Window(5)
    cfg = frozenset({CENTER})
    sparse, _ = step(cfg, t, {}, [], window)
    full, _ = full_step(cfg, t, {}, [], window)
    assert sparse == full
    # every tile whose side 1 touches the centre turns black
    assert sparse == frozenset({CENTER} | {TileCoord(s, 1) for s in range(1, 6)})


def test_zero_steps() -> None:
    result = simulate(_lone_center(), parse_rules(""))
    assert result.configurations == [frozenset({CENTER})]
    assert result.traces == []


def test_trace_tsv(table: RuleTable) -> None:
    text = write_trace_tsv([StepTrace(step=0, applied={CENTER: 1}), StepTrace(step=1, applied={CENTER: 26})], table)
    assert text.splitlines() == ["step\tcell\trule_id\tnew_state", "0\t0(0)\t1\tW", "1\t0(0)\t26\tB"]


def test_covering_depth_keeps_the_neighbourhood_inside() -> None:
    depth = covering_depth({CENTER})
    assert depth == max(get_navigator().level(c) for c in NEAR_CENTER)
    Window(depth).check(frozenset({CENTER}))


@pytest.mark.parametrize("name", ["fork", "controller-black-passage", "sensor-white-passage"])
def test_inferred_orientations_are_the_builtin_ones(name: str, table: RuleTable) -> None:
    s = builtin(name)
    assert infer_orientations(s, table) == s.orientations
