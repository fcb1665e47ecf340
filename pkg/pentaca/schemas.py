# pentaca\schemas.py
import re
from typing import Annotated, Any, Dict, List, Literal, NamedTuple, Optional

from pydantic import BaseModel, BeforeValidator, ConfigDict, Field, PositiveFloat, model_validator

from .errors import CoordinateError

State = Literal["W", "B"]

_COORD_RE = re.compile(r"^\s*(\d+)\s*\(\s*(\d+)\s*\)\s*$")


class TileCoord(NamedTuple):
    """Tile ν(σ): index ν in the tree of sector σ; 0(0) is the central tile."""

    sector: int
    index: int

    def __str__(self) -> str:
        return f"{self.index}({self.sector})"

    @classmethod
    def parse(cls, text: str) -> "TileCoord":
        match = _COORD_RE.match(text)
        if not match:
            raise CoordinateError(f"not a tile coordinate: {text!r}")
        return checked_coord(int(match.group(2)), int(match.group(1)))


def checked_coord(sector: int, index: int) -> TileCoord:
    if not 0 <= sector <= 5:
        raise CoordinateError(f"sector {sector} outside 0..5")
    if (sector == 0) != (index == 0):
        raise CoordinateError(f"{index}({sector}): only the central tile 0(0) uses sector 0")
    if index < 0:
        raise CoordinateError(f"negative index {index}")
    return TileCoord(sector, index)


CENTER = TileCoord(0, 0)


def _coerce_coord(value: Any) -> Any:
    if isinstance(value, str):
        return TileCoord.parse(value)
    if isinstance(value, (tuple, list)) and len(value) == 2:
        return checked_coord(int(value[0]), int(value[1]))
    return value


Coord = Annotated[TileCoord, BeforeValidator(_coerce_coord)]


class Rule(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: int = Field(ge=1)
    current: State
    word: str = Field(pattern=r"^[WB]{10}$")
    next: State

    def __str__(self) -> str:
        return f"{self.id} {self.current} {self.word} {self.next}"


class DeterminismConflict(BaseModel):
    rule_a: int
    rule_b: int


class RotationConflict(BaseModel):
    model_config = ConfigDict(frozen=True)

    rule_a: int
    rule_b: int
    shift: int = Field(ge=1, le=4)


class OrbitMember(BaseModel):
    rule_id: int
    shift: int


class RotationOrbit(BaseModel):
    """Rules whose words are rotations of each other, shifts taken from the lowest id."""

    current: State
    members: List[OrbitMember] = Field(default_factory=list)

    @property
    def ids(self) -> List[int]:
        return [m.rule_id for m in self.members]


class CellRole(BaseModel):
    cell: Coord
    role: Literal["track", "milestone", "structure"]


class LocomotiveSpec(BaseModel):
    kind: Literal["simple", "double"]
    entry: List[Coord] = Field(default_factory=list)

    @model_validator(mode="after")
    def _entry_size(self) -> "LocomotiveSpec":
        if self.entry and len(self.entry) != (1 if self.kind == "simple" else 2):
            raise ValueError(f"a {self.kind} locomotive occupies {1 if self.kind == 'simple' else 2} cell(s)")
        return self


class ExpectedRow(BaseModel):
    cell: Coord
    rules: List[int]


class Scenario(BaseModel):
    name: str
    group: str = ""
    description: str = ""
    loco: Optional[LocomotiveSpec] = None
    cells: List[CellRole] = Field(default_factory=list)
    orientations: Dict[Coord, int] = Field(default_factory=dict)
    initial_black: List[Coord] = Field(default_factory=list)
    tracked: List[Coord] = Field(default_factory=list)
    expected: List[ExpectedRow] = Field(default_factory=list)
    first_step: int = 0
    steps: int = Field(default=0, ge=0)
    depth: int = Field(default=8, ge=2)
    notes: List[str] = Field(default_factory=list)

    @model_validator(mode="after")
    def _consistent(self) -> "Scenario":
        listed = {c.cell for c in self.cells}
        stray = [str(c) for c in self.tracked if c not in listed]
        if stray:
            raise ValueError(f"tracked cells missing from cells: {', '.join(stray)}")
        tracked = set(self.tracked)
        for row in self.expected:
            if row.cell not in tracked:
                raise ValueError(f"expected row for untracked cell {row.cell}")
            if len(row.rules) != self.steps:
                raise ValueError(f"expected row {row.cell} has {len(row.rules)} ids for {self.steps} steps")
        for cell, shift in self.orientations.items():
            if not 0 <= shift <= 4:
                raise ValueError(f"orientation of {cell} outside 0..4: {shift}")
        return self

    def expected_at(self, cell: TileCoord, step: int) -> Optional[int]:
        """Rule id expected at absolute step `step`, if recorded."""
        k = step - self.first_step
        for row in self.expected:
            if row.cell == cell and 0 <= k < len(row.rules):
                return row.rules[k]
        return None

    def expected_map(self) -> Dict[TileCoord, List[int]]:
        return {row.cell: list(row.rules) for row in self.expected}


class StepTrace(BaseModel):
    step: int
    applied: Dict[Coord, int] = Field(default_factory=dict)


class Mismatch(BaseModel):
    cell: Coord
    step: int
    expected: int
    actual: Optional[int] = None


class VerifyReport(BaseModel):
    scenario: str
    group: str = ""
    mismatches: List[Mismatch] = Field(default_factory=list)
    error: Optional[str] = None
    idle_ok: Optional[bool] = None

    @property
    def passed(self) -> bool:
        return not self.mismatches and self.error is None and self.idle_ok is not False


class RenderStyle(BaseModel):
    black_fill: str = "#1b2a6b"
    white_fill: str = "#ffffff"
    stroke: str = "#555555"
    stroke_width: PositiveFloat = 0.002
    labels: bool = False
