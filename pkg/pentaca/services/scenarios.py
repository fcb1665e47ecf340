# pentaca\services\scenarios.py
import logging
from collections import OrderedDict
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import ValidationError

from ..errors import PentacaError, ScenarioError
from ..fixtures import STRUCTURES, TRACES, TRACES_BY_NAME
from ..schemas import CellRole, ExpectedRow, LocomotiveSpec, Mismatch, Scenario, TileCoord, VerifyReport
from .engine import Configuration, covering_depth, infer_orientations, simulate
from .rules import RuleTable, shipped_rules

logger = logging.getLogger(__name__)

LocoArg = Union[str, LocomotiveSpec]

SECTIONS = ("scenario", "cells", "orientations", "initial", "tracked", "expected")


def _kind(loco: LocoArg) -> str:
    kind = loco.kind if isinstance(loco, LocomotiveSpec) else str(loco).lower()
    if kind not in ("simple", "double"):
        raise ScenarioError(f"unknown locomotive kind: {loco!r}")
    return kind


def _coords(text: str) -> List[TileCoord]:
    return [TileCoord.parse(c) for c in text.split()]


@lru_cache(maxsize=None)
def _build(name: str) -> Scenario:
    trace = TRACES_BY_NAME[name]
    structure = STRUCTURES[trace.structure]
    table = shipped_rules()
    tracked = _coords(" ".join(c for c, _ in trace.rows))
    expected = {TileCoord.parse(c): list(ids) for c, ids in trace.rows}
    fixed = frozenset(TileCoord.parse(c) for c in structure.cells)
    setting = frozenset(_coords(trace.setting))
    entry = _coords(trace.entry)
    initial = fixed | setting | frozenset(entry)
    steps = len(trace.rows[0][1])
    depth = covering_depth(initial | set(tracked))

    skeleton = Scenario(
        name=trace.name,
        group=trace.group,
        description=trace.description,
        loco=LocomotiveSpec(kind=trace.loco, entry=entry),
        cells=[CellRole(cell=c, role="track") for c in tracked],
        initial_black=sorted(initial),
        tracked=tracked,
        expected=[ExpectedRow(cell=c, rules=expected[c]) for c in tracked],
        first_step=trace.first_step,
        steps=steps,
        depth=depth,
        notes=list(structure.notes) + list(trace.notes),
    )
    pinned = {TileCoord.parse(c): shift for c, shift in trace.pinned}
    try:
        orientations = infer_orientations(skeleton, table, pinned=pinned)
        draft = skeleton.model_copy(update={"orientations": orientations})
        configurations = simulate(draft, table).configurations
    except PentacaError as exc:
        raise ScenarioError(f"built-in scenario {name} does not replay: {exc}") from exc
    logger.info("scenario %s: %d black cells, %d oriented cells", name, len(initial), len(orientations))

    ever = frozenset().union(*configurations)
    cells = []
    for c in tracked:
        if c in fixed:
            role = "milestone"
        elif c in setting or c not in ever:
            role = "structure"
        else:
            role = "track"
        cells.append(CellRole(cell=c, role=role))
    cells += [CellRole(cell=c, role="milestone") for c in sorted(fixed) if c not in expected]
    cells += [CellRole(cell=c, role="structure") for c in sorted(setting) if c not in expected]
    cells += [CellRole(cell=c, role="track") for c in entry if c not in expected]
    return draft.model_copy(update={"cells": cells})


def scenario_names() -> List[str]:
    return [t.name for t in TRACES]


def scenario_groups() -> Dict[str, List[str]]:
    groups: Dict[str, List[str]] = OrderedDict()
    for t in TRACES:
        groups.setdefault(t.group, []).append(t.name)
    return groups


def builtin_scenarios() -> Dict[str, Scenario]:
    return OrderedDict((name, _build(name)) for name in scenario_names())


def builtin(name: str) -> Scenario:
    if name not in TRACES_BY_NAME:
        raise ScenarioError(f"unknown scenario {name!r}; see `pentaca scenario list`")
    return _build(name)


def get_scenario(name_or_path: Union[str, Path]) -> Scenario:
    if str(name_or_path) in TRACES_BY_NAME:
        return _build(str(name_or_path))
    path = Path(name_or_path)
    if path.is_file():
        return load_scenario(path)
    raise ScenarioError(f"{name_or_path} is neither a built-in scenario nor a scenario file")


# -- builders -------------------------------------------------------------


def vertical_track(direction: str, loco: LocoArg) -> Scenario:
    if direction not in ("down", "up"):
        raise ScenarioError(f"direction must be down or up, got {direction!r}")
    return _build(f"vertical-{direction}-{_kind(loco)}")


def horizontal_track(node: str, chirality: str, loco: LocoArg) -> Scenario:
    if node not in ("black", "white"):
        raise ScenarioError(f"node must be black or white, got {node!r}")
    if chirality not in ("cw", "ccw"):
        raise ScenarioError(f"chirality must be cw or ccw, got {chirality!r}")
    return _build(f"horizontal-{node}-{chirality}-{_kind(loco)}")


def fixed_switch(entry_side: str, loco: LocoArg) -> Scenario:
    if entry_side not in ("left", "right"):
        raise ScenarioError(f"entry side must be left or right, got {entry_side!r}")
    return _build(f"fixed-switch-{entry_side}-{_kind(loco)}")


def doubler(loco: LocoArg = "simple") -> Scenario:
    if _kind(loco) != "simple":
        raise ScenarioError("the doubler is entered by a simple locomotive")
    return _build("doubler")


def fork(loco: LocoArg = "simple") -> Scenario:
    if _kind(loco) != "simple":
        raise ScenarioError("the fork is entered by a simple locomotive")
    return _build("fork")


def selector(loco: LocoArg) -> Scenario:
    return _build(f"selector-{_kind(loco)}")


def controller(colour: str, mode: str) -> Scenario:
    if colour not in ("black", "white"):
        raise ScenarioError(f"colour must be black or white, got {colour!r}")
    if mode == "passage":
        return _build(f"controller-{colour}-passage")
    if mode == "signal":
        other = "white" if colour == "black" else "black"
        return _build(f"controller-{colour}-to-{other}")
    raise ScenarioError(f"mode must be passage or signal, got {mode!r}")


def controller_sensor(colour: str, mode: str) -> Scenario:
    if colour not in ("black", "white"):
        raise ScenarioError(f"colour must be black or white, got {colour!r}")
    if mode not in ("passage", "signal"):
        raise ScenarioError(f"mode must be passage or signal, got {mode!r}")
    if colour == "white" and mode == "signal":
        raise ScenarioError("a white sensor is turned black by the locomotive itself; there is no signal run")
    return _build(f"sensor-{colour}-{mode}")


# -- scenario files -------------------------------------------------------


def dump_scenario(s: Scenario) -> str:
    out = ["[scenario]", f"name = {s.name}"]
    if s.group:
        out.append(f"group = {s.group}")
    if s.description:
        out.append(f"description = {s.description}")
    if s.loco is not None:
        out.append(" ".join(["loco =", s.loco.kind] + [str(c) for c in s.loco.entry]))
    out += [f"first_step = {s.first_step}", f"steps = {s.steps}", f"depth = {s.depth}"]
    out += [f"note = {n}" for n in s.notes]
    out += ["", "[cells]"] + [f"{r.cell} {r.role}" for r in s.cells]
    out += ["", "[orientations]"] + [f"{c} {shift}" for c, shift in s.orientations.items()]
    out += ["", "[initial]"] + [str(c) for c in s.initial_black]
    out += ["", "[tracked]"] + [str(c) for c in s.tracked]
    out += ["", "[expected]"] + [" ".join([str(r.cell)] + [str(i) for i in r.rules]) for r in s.expected]
    return "\n".join(out) + "\n"


def save_scenario(s: Scenario, path: Union[str, Path]) -> None:
    Path(path).write_text(dump_scenario(s), encoding="utf-8")


def _split(text: str, source: str) -> Dict[str, List[Tuple[int, str]]]:
    sections: Dict[str, List[Tuple[int, str]]] = {}
    current: Optional[str] = None
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("[") and line.endswith("]"):
            current = line[1:-1].strip().lower()
            if current not in SECTIONS:
                raise ScenarioError(f"{source}:{line_no}: unknown section [{current}]")
            sections.setdefault(current, [])
            continue
        if current is None:
            raise ScenarioError(f"{source}:{line_no}: text before the first section")
        sections[current].append((line_no, line))
    return sections


def parse_scenario(text: str, source: str = "<scenario>") -> Scenario:
    sections = _split(text, source)
    data: Dict[str, object] = {"notes": []}
    where: Dict[str, int] = {}

    for line_no, line in sections.get("scenario", []):
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep:
            raise ScenarioError(f"{source}:{line_no}: expected `key = value`")
        where[key] = line_no
        if key == "note":
            data["notes"].append(value)
        elif key == "loco":
            fields = value.split()
            if not fields:
                raise ScenarioError(f"{source}:{line_no}: empty locomotive")
            data["loco"] = {"kind": fields[0], "entry": fields[1:]}
        elif key in ("name", "group", "description", "first_step", "steps", "depth"):
            data[key] = value
        else:
            raise ScenarioError(f"{source}:{line_no}: unknown key {key!r}")

    def pairs(section: str) -> List[Tuple[int, List[str]]]:
        return [(n, line.split()) for n, line in sections.get(section, [])]

    data["cells"] = [{"cell": f[0], "role": f[1] if len(f) > 1 else "structure"} for _, f in pairs("cells")]
    data["orientations"] = {f[0]: f[1] for _, f in pairs("orientations") if len(f) == 2}
    data["initial_black"] = [c for _, f in pairs("initial") for c in f]
    data["tracked"] = [c for _, f in pairs("tracked") for c in f]
    data["expected"] = [{"cell": f[0], "rules": f[1:]} for _, f in pairs("expected")]
    for n, f in pairs("orientations"):
        if len(f) != 2:
            raise ScenarioError(f"{source}:{n}: expected `cell shift`")

    try:
        return Scenario.model_validate(data)
    except (ValidationError, PentacaError, ValueError) as exc:
        raise ScenarioError(f"{source}: {_describe(exc)}") from exc


def _describe(exc: Exception) -> str:
    if isinstance(exc, ValidationError):
        parts = []
        for err in exc.errors():
            loc = ".".join(str(p) for p in err["loc"]) or "scenario"
            parts.append(f"{loc}: {err['msg']}")
        return "; ".join(parts)
    return str(exc)


def load_scenario(path: Union[str, Path]) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc}") from exc
    return parse_scenario(text, source=str(path))


# -- verification ---------------------------------------------------------


def verify(scenario: Scenario, table: RuleTable, idle: bool = False) -> VerifyReport:
    """Run the scenario and list every (cell, step) whose rule differs from the recorded one."""
    report = VerifyReport(scenario=scenario.name, group=scenario.group)
    try:
        traces = simulate(scenario, table).traces
    except PentacaError as exc:
        logger.warning("%s: %s", scenario.name, exc)
        report.error = str(exc)
        return report
    for trace in traces:
        for cell, actual in trace.applied.items():
            want = scenario.expected_at(cell, trace.step)
            if want is not None and want != actual:
                logger.debug("%s: %s at step %d applied %d, expected %d", scenario.name, cell, trace.step, actual, want)
                report.mismatches.append(Mismatch(cell=cell, step=trace.step, expected=want, actual=actual))
    if idle:
        report.idle_ok = check_idle(scenario, table)
    return report


def idle_configuration(scenario: Scenario, table: RuleTable) -> Configuration:
    """
    The structure without its locomotive. Without entry cells, the initial
    black cells still black at every recorded step, the one after the last
    excluded.
    """
    if scenario.loco is not None and scenario.loco.entry:
        return frozenset(scenario.initial_black) - frozenset(scenario.loco.entry)
    configurations = simulate(scenario, table).configurations
    recorded = configurations[:-1] or configurations
    return frozenset.intersection(*recorded)


def check_idle(scenario: Scenario, table: RuleTable, steps: int = 10) -> bool:
    try:
        start = idle_configuration(scenario, table)
        configurations = simulate(scenario, table, steps=steps, start=start).configurations
    except PentacaError as exc:
        logger.warning("%s: idle structure is not stable: %s", scenario.name, exc)
        return False
    return all(cfg == start for cfg in configurations)
