# pentaca\services\engine.py
"""
Synchronous update of the two-state automaton over a finite window of the
pentagrid. Configurations are frozen sets of black cells on a white
background; orientations map a cell to the shift of its local numbering.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..errors import BoundaryBreach, BoundaryError, NoRule, PentacaError, RunError
from ..schemas import Rule, Scenario, StepTrace, TileCoord
from .coords import Navigator, get_navigator
from .rules import RuleTable

logger = logging.getLogger(__name__)

Configuration = FrozenSet[TileCoord]
OrientationMap = Mapping[TileCoord, int]

EMPTY: Configuration = frozenset()


class Window:
    """
    Tiles of level <= depth. A tile is interior when its ten neighbours all lie
    in the window; only interior tiles are ever evaluated.
    """

    def __init__(self, depth: int, navigator: Optional[Navigator] = None):
        self.depth = depth
        self.nav = navigator or get_navigator()
        self._interior: Dict[TileCoord, bool] = {}
        self._interior_cells: Optional[List[TileCoord]] = None

    def contains(self, c: TileCoord) -> bool:
        return self.nav.level(c) <= self.depth

    def is_interior(self, c: TileCoord) -> bool:
        known = self._interior.get(c)
        if known is None:
            known = self.contains(c) and all(self.contains(n) for n in self.nav.neighbors(c))
            self._interior[c] = known
        return known

    def interior_cells(self) -> List[TileCoord]:
        if self._interior_cells is None:
            self._interior_cells = [c for c in self.nav.cells_up_to(self.depth) if self.is_interior(c)]
        return self._interior_cells

    def check(self, cfg: Configuration) -> None:
        """Every cell that can see a black cell must be interior."""
        breach = set()
        for b in cfg:
            if not self.is_interior(b) or not all(self.is_interior(n) for n in self.nav.neighbors(b)):
                breach.add(b)
        if breach:
            raise BoundaryBreach(breach, self.depth)


def state_of(cfg: Configuration, c: TileCoord) -> str:
    return "B" if c in cfg else "W"


def neighborhood_word(
    c: TileCoord,
    cfg: Configuration,
    om: OrientationMap,
    window: Optional[Window] = None,
    navigator: Optional[Navigator] = None,
) -> str:
    """States of the ten neighbours of c, read in c's local numbering."""
    nav = navigator or (window.nav if window else get_navigator())
    if window is not None and not window.is_interior(c):
        raise BoundaryError(f"{c} has neighbours outside the window of depth {window.depth}")
    return "".join("B" if n in cfg else "W" for n in nav.oriented(c, om.get(c, 0)))


def apply_rule(c: TileCoord, cfg: Configuration, table: RuleTable, om: OrientationMap, window: Window) -> Rule:
    state = state_of(cfg, c)
    word = neighborhood_word(c, cfg, om, window)
    rule = table.lookup(state, word)
    if rule is None:
        raise NoRule(c, state, word)
    return rule


def _advance(
    cells: Iterable[TileCoord],
    cfg: Configuration,
    table: RuleTable,
    om: OrientationMap,
    tracked: Sequence[TileCoord],
    window: Window,
    step_index: int,
) -> Tuple[Configuration, StepTrace]:
    blacks = set()
    applied: Dict[TileCoord, Rule] = {}
    for c in cells:
        rule = apply_rule(c, cfg, table, om, window)
        applied[c] = rule
        if rule.next == "B":
            blacks.add(c)
    trace = StepTrace(step=step_index, applied={c: applied[c].id for c in tracked})
    nxt = frozenset(blacks)
    window.check(nxt)
    return nxt, trace


def step(
    cfg: Configuration,
    table: RuleTable,
    om: OrientationMap,
    tracked: Sequence[TileCoord],
    window: Window,
    step_index: int = 0,
) -> Tuple[Configuration, StepTrace]:
    """
    One synchronous step. Only black cells, their neighbours and the tracked
    cells are evaluated; any other cell sees an all-white neighbourhood and
    stays white under rule 1.
    """
    window.check(cfg)
    frontier = set(cfg)
    for b in cfg:
        frontier.update(window.nav.neighbors(b))
    frontier.update(tracked)
    return _advance(sorted(frontier), cfg, table, om, tracked, window, step_index)


def full_step(
    cfg: Configuration,
    table: RuleTable,
    om: OrientationMap,
    tracked: Sequence[TileCoord],
    window: Window,
    step_index: int = 0,
) -> Tuple[Configuration, StepTrace]:
    """Same step, evaluating every interior cell of the window."""
    window.check(cfg)
    cells = set(window.interior_cells())
    cells.update(tracked)
    return _advance(sorted(cells), cfg, table, om, tracked, window, step_index)


@dataclass
class RunResult:
    # configurations[k] is the configuration before step first_step + k
    configurations: List[Configuration] = field(default_factory=list)
    traces: List[StepTrace] = field(default_factory=list)


def initial_configuration(scenario: Scenario) -> Configuration:
    return frozenset(scenario.initial_black)


def simulate(
    scenario: Scenario,
    table: RuleTable,
    steps: Optional[int] = None,
    full_scan: bool = False,
    start: Optional[Configuration] = None,
) -> RunResult:
    steps = scenario.steps if steps is None else steps
    window = Window(scenario.depth)
    advance = full_step if full_scan else step
    cfg = initial_configuration(scenario) if start is None else start
    result = RunResult(configurations=[cfg])
    for k in range(steps):
        absolute = scenario.first_step + k
        try:
            cfg, trace = advance(cfg, table, scenario.orientations, scenario.tracked, window, absolute)
        except PentacaError as exc:
            if isinstance(exc, NoRule):
                exc.step = absolute
            raise RunError(absolute, exc) from exc
        result.configurations.append(cfg)
        result.traces.append(trace)
    logger.debug("%s: %d steps, %d black cells at the end", scenario.name, steps, len(cfg))
    return result


def run(scenario: Scenario, table: RuleTable, steps: Optional[int] = None) -> List[StepTrace]:
    return simulate(scenario, table, steps).traces


def write_trace_tsv(traces: Sequence[StepTrace], table: RuleTable) -> str:
    lines = ["step\tcell\trule_id\tnew_state"]
    for trace in traces:
        for cell, rule_id in trace.applied.items():
            rule = table.by_id.get(rule_id)
            lines.append(f"{trace.step}\t{cell}\t{rule_id}\t{rule.next if rule else '?'}")
    return "\n".join(lines) + "\n"


def covering_depth(cells: Iterable[TileCoord], navigator: Optional[Navigator] = None) -> int:
    """Smallest window depth keeping every cell within two steps of `cells` inside."""
    nav = navigator or get_navigator()
    return max((nav.level(c) for c in nav.ball(set(cells), 2)), default=2)


def infer_orientations(
    skeleton: Scenario,
    table: RuleTable,
    pinned: Optional[OrientationMap] = None,
) -> Dict[TileCoord, int]:
    """
    Shifts under which the skeleton's initial configuration reproduces its
    expected rule ids. Cells whose canonical numbering works keep shift 0 and
    are left out of the map.
    """
    from .solver import replay_orientations

    found = replay_orientations(
        initial_configuration(skeleton),
        skeleton.tracked,
        skeleton.expected_map(),
        table,
        depth=skeleton.depth,
        steps=skeleton.steps,
        first_step=skeleton.first_step,
        pinned=pinned,
    )
    return found.orientations
