# pentaca\services\solver.py
"""
Recovery of per-cell orientations from a trace table.

The initial configuration is given. The run is replayed forward: at each step
every cell the sparse step evaluates keeps the shifts under which its
neighbourhood has a rule, and a tracked cell only those giving the recorded
rule id. The shifts left are grouped by the state they lead to. One group
fixes the cell's next state; several groups split the run, and each branch is
followed until the recorded rows confirm or refute it. Two complete branches
that run differently make the trace ambiguous.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from ..config import get_settings
from ..errors import Ambiguous, BoundaryBreach, NoFit
from ..schemas import TileCoord
from .coords import Navigator, get_navigator
from .engine import Configuration, Window
from .rules import RuleTable

logger = logging.getLogger(__name__)

SHIFTS: Tuple[int, ...] = (0, 1, 2, 3, 4)

Candidates = Dict[TileCoord, Tuple[int, ...]]
# next state -> shifts leading to it
Groups = Dict[str, Tuple[int, ...]]


@dataclass
class Replay:
    orientations: Dict[TileCoord, int]
    # configurations[k] is the configuration before relative step k
    configurations: List[Configuration]
    nodes: int


@dataclass
class _Solution:
    candidates: Candidates
    configurations: List[Configuration]


@dataclass
class _Failure:
    cell: Optional[TileCoord]
    step: int


@dataclass
class _Search:
    tracked: Sequence[TileCoord]
    expected: Mapping[TileCoord, Sequence[Optional[int]]]
    table: RuleTable
    window: Window
    steps: int
    budget: int
    nodes: int = 0
    deepest: Optional[_Failure] = None
    solutions: List[_Solution] = field(default_factory=list)

    @property
    def nav(self) -> Navigator:
        return self.window.nav

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            raise NoFit(f"replay budget of {self.budget} nodes exhausted")

    def _fail(self, cell: Optional[TileCoord], k: int) -> None:
        if self.deepest is None or k >= self.deepest.step:
            self.deepest = _Failure(cell, k)

    def _want(self, c: TileCoord, k: int) -> Optional[int]:
        row = self.expected.get(c)
        if row is None or k >= len(row):
            return None
        return row[k]

    def evaluate(self, cfg: Configuration, cand: Candidates, k: int) -> Optional[Dict[TileCoord, Groups]]:
        try:
            self.window.check(cfg)
        except BoundaryBreach as exc:
            self._fail(exc.cells[0], k)
            return None
        cells = set(cfg)
        for b in cfg:
            cells.update(self.nav.neighbors(b))
        cells.update(self.tracked)

        found: Dict[TileCoord, Groups] = {}
        for c in sorted(cells):
            if not self.window.is_interior(c):
                self._fail(c, k)
                return None
            state = "B" if c in cfg else "W"
            want = self._want(c, k)
            groups: Dict[str, List[int]] = {}
            for shift in cand.get(c, SHIFTS):
                word = "".join("B" if n in cfg else "W" for n in self.nav.oriented(c, shift))
                rule = self.table.lookup(state, word)
                if rule is None or (want is not None and rule.id != want):
                    continue
                groups.setdefault(rule.next, []).append(shift)
            if not groups:
                self._fail(c, k)
                return None
            found[c] = {nxt: tuple(shifts) for nxt, shifts in groups.items()}
        return found

    def descend(self, cfg: Configuration, cand: Candidates, k: int, frames: List[Configuration]) -> bool:
        """True once a second solution is found."""
        self._tick()
        if k == self.steps:
            try:
                self.window.check(cfg)
            except BoundaryBreach as exc:
                self._fail(exc.cells[0], k)
                return False
            self.solutions.append(_Solution(cand, frames))
            return len(self.solutions) >= 2

        found = self.evaluate(cfg, cand, k)
        if found is None:
            return False
        last = k == self.steps - 1
        fixed = dict(cand)
        blacks = set()
        split: List[Tuple[TileCoord, List[Tuple[str, Tuple[int, ...]]]]] = []
        for c, groups in found.items():
            options = sorted(groups.items(), key=lambda item: min(item[1]))
            if len(options) == 1 or last:
                # the state after the last step is never observed
                nxt = options[0][0]
                fixed[c] = tuple(sorted(s for _, shifts in options for s in shifts)) if last else options[0][1]
                if nxt == "B":
                    blacks.add(c)
            else:
                split.append((c, options))
        return self._branch(split, 0, fixed, blacks, k, frames)

    def _branch(self, split, i: int, cand: Candidates, blacks: set, k: int, frames: List[Configuration]) -> bool:
        if i == len(split):
            nxt = frozenset(blacks)
            return self.descend(nxt, cand, k + 1, frames + [nxt])
        cell, options = split[i]
        for state, shifts in options:
            narrowed = dict(cand)
            narrowed[cell] = shifts
            if self._branch(split, i + 1, narrowed, blacks | {cell} if state == "B" else blacks, k, frames):
                return True
        return False


def _check_rows(expected: Mapping[TileCoord, Sequence[Optional[int]]], table: RuleTable) -> None:
    for cell, ids in expected.items():
        previous = None
        for k, rule_id in enumerate(ids):
            if rule_id is None:
                previous = None
                continue
            rule = table.by_id.get(rule_id)
            if rule is None:
                raise NoFit(f"{cell}: rule {rule_id} at step {k} is not in the table")
            if previous is not None and previous.next != rule.current:
                raise NoFit(f"{cell}: rule {previous.id} leaves {previous.next} but rule {rule_id} expects {rule.current}")
            previous = rule


def _first_difference(a: List[Configuration], b: List[Configuration]) -> Tuple[int, FrozenSet[TileCoord]]:
    for k, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return k, x ^ y
    return len(a), frozenset()


def replay_orientations(
    initial: Configuration,
    tracked: Sequence[TileCoord],
    expected: Mapping[TileCoord, Sequence[Optional[int]]],
    table: RuleTable,
    depth: int,
    steps: int,
    first_step: int = 0,
    pinned: Optional[Mapping[TileCoord, int]] = None,
    budget: Optional[int] = None,
    navigator: Optional[Navigator] = None,
) -> Replay:
    """
    Orientations under which `initial` reproduces the expected rule ids.

    A cell whose canonical numbering fits keeps shift 0 and is left out of the
    map; otherwise it takes the smallest fitting shift. `pinned` fixes the
    shift of cells the rows leave undetermined.
    """
    _check_rows(expected, table)
    search = _Search(
        tracked=list(tracked),
        expected=expected,
        table=table,
        window=Window(depth, navigator or get_navigator()),
        steps=steps,
        budget=budget if budget is not None else get_settings().solver_budget,
    )
    start = frozenset(initial)
    cand: Candidates = {c: (s,) for c, s in (pinned or {}).items()}
    search.descend(start, cand, 0, [start])

    if not search.solutions:
        where = ""
        if search.deepest is not None and search.deepest.cell is not None:
            where = f" (first refuted at {search.deepest.cell}, step {first_step + search.deepest.step})"
        raise NoFit(f"no orientations reproduce the trace of {', '.join(str(c) for c in tracked)}{where}")
    if len(search.solutions) > 1:
        k, cells = _first_difference(search.solutions[0].configurations, search.solutions[1].configurations)
        raise Ambiguous(first_step + k, cells)

    solution = search.solutions[0]
    orientations = {}
    for c, shifts in solution.candidates.items():
        shift = 0 if 0 in shifts else min(shifts)
        if shift:
            orientations[c] = shift
    logger.debug("orientations of %d cells after %d replay nodes", len(orientations), search.nodes)
    return Replay(orientations=orientations, configurations=solution.configurations, nodes=search.nodes)
