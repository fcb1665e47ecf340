# pentaca\fixtures.py
"""
Recorded executions of every structure: for each tracked cell the rule id
applied at each step, columns starting at `first_step`. Each run names its
structure, the cells the locomotive occupies when the run starts and, for
the flip-flop and memory switch, the black cell holding their state.

The black cells of a structure are its milestones as the descriptions list
them, misprints corrected, plus the few black cells the descriptions show
only in figures.
"""
from dataclasses import dataclass, field
from typing import Dict, Tuple

Row = Tuple[str, Tuple[int, ...]]


@dataclass(frozen=True)
class TraceTable:
    name: str
    group: str
    loco: str
    structure: str
    # locomotive cells before the first recorded step
    entry: str
    rows: Tuple[Row, ...]
    setting: str = ""
    # shifts the recorded rows leave open
    pinned: Tuple[Tuple[str, int], ...] = ()
    first_step: int = 0
    description: str = ""
    notes: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class Structure:
    name: str
    milestones: Tuple[str, ...]
    # black cells drawn but never named
    support: Tuple[str, ...] = ()
    notes: Tuple[str, ...] = ()

    @property
    def cells(self) -> Tuple[str, ...]:
        return self.milestones + self.support


def _rows(cells: str, *ids: Tuple[int, ...]) -> Tuple[Row, ...]:
    names = cells.split()
    if len(names) != len(ids):
        raise ValueError(f"{len(names)} cells for {len(ids)} rows")
    return tuple(zip(names, ids))


_VERT_DOWN = "4(1) 1(1) 0(0) 1(3) 3(3) 1(2) 1(4)"
_VERT_UP = "3(3) 1(3) 0(0) 1(1) 4(1) 1(2) 1(5)"
_HORIZ_BLACK_CCW = "3(1) 10(1) 4(1) 5(2) 2(2) 12(1) 13(2)"
_HORIZ_BLACK_CW = "4(3) 10(3) 3(3) 7(3) 2(3) 8(3) 20(3)"
_HORIZ_WHITE_CCW = "2(2) 7(2) 3(2) 10(2) 4(2) 1(2) 0(0)"
_HORIZ_WHITE_CW = "4(2) 10(2) 3(2) 7(2) 2(2) 1(2) 0(0)"
_FIXED = "1(1) 1(5) 0(0) 1(3) 1(2) 1(4)"
_DOUBLER = "2(1) 1(1) 0(0) 1(3) 2(2) 1(2) 2(3) 1(5) 1(4)"
_FORK = "1(3) 0(0) 1(1) 1(4) 2(5) 1(5)"
_SELECTOR = "1(3) 0(0) 1(2) 2(2) 1(4) 2(5) 2(3) 2(4)"
_CONTROL = "1(2) 0(0) 1(4) 2(2) 1(1) 2(1)"
_SIGNAL = "6(1) 2(1) 0(0) 2(2) 1(1) 1(5)"
_SENSOR_WHITE = "4(2) 1(2) 0(0) 1(4) 4(4) 2(2) 1(1)"
_SENSOR_BLACK = "4(2) 1(2) 0(0) 2(2) 1(1)"
_SENSOR_SIGNAL = "6(1) 2(1) 2(2) 1(1)"

TRACES: Tuple[TraceTable, ...] = (
    TraceTable(
        name="vertical-down-simple",
        group="vertical-down",
        loco="simple",
        structure="vertical-down",
        entry="12(1)",
        description="simple locomotive going down a vertical track",
        rows=_rows(
            _VERT_DOWN,
            (26, 27, 28, 25, 25, 25),
            (25, 26, 27, 28, 25, 25),
            (25, 25, 26, 27, 28, 25),
            (25, 25, 25, 26, 27, 28),
            (25, 25, 25, 25, 26, 27),
            (12, 12, 15, 16, 17, 12),
            (2, 2, 2, 8, 11, 2),
        ),
    ),
    TraceTable(
        name="vertical-down-double",
        group="vertical-down",
        loco="double",
        structure="vertical-down",
        entry="4(1) 12(1)",
        description="double locomotive going down a vertical track",
        rows=_rows(
            _VERT_DOWN,
            (29, 31, 28, 25, 25, 25),
            (26, 29, 31, 28, 25, 25),
            (25, 26, 29, 31, 28, 25),
            (25, 25, 26, 29, 31, 28),
            (25, 25, 25, 26, 29, 31),
            (12, 15, 33, 34, 17, 12),
            (2, 2, 8, 32, 11, 2),
        ),
    ),
    TraceTable(
        name="vertical-up-simple",
        group="vertical-up",
        loco="simple",
        structure="vertical-up",
        entry="8(3)",
        description="simple locomotive going up a vertical track",
        rows=_rows(
            _VERT_UP,
            (41, 42, 48, 35, 35, 35),
            (35, 41, 42, 48, 35, 35),
            (35, 35, 41, 42, 48, 35),
            (35, 35, 35, 41, 42, 48),
            (35, 35, 35, 35, 41, 42),
            (12, 12, 17, 16, 15, 12),
            (2, 2, 2, 8, 50, 2),
        ),
    ),
    TraceTable(
        name="vertical-up-double",
        group="vertical-up",
        loco="double",
        structure="vertical-up",
        entry="3(3) 8(3)",
        description="double locomotive going up a vertical track",
        rows=_rows(
            _VERT_UP,
            (52, 53, 48, 35, 35, 35),
            (41, 52, 53, 48, 35, 35),
            (35, 41, 52, 53, 48, 35),
            (35, 35, 41, 52, 53, 48),
            (35, 35, 35, 41, 52, 53),
            (12, 17, 34, 33, 15, 12),
            (2, 2, 8, 22, 50, 2),
        ),
    ),
    TraceTable(
        name="horizontal-black-ccw-simple",
        group="horizontal-black-ccw-simple",
        loco="simple",
        structure="horizontal-black-ccw",
        entry="7(1)",
        first_step=2,
        description="simple locomotive running counter-clockwise around the sons of a black node",
        rows=_rows(
            _HORIZ_BLACK_CCW,
            (78, 83, 87, 90, 58, 58, 58),
            (62, 65, 73, 63, 62, 62, 62),
            (59, 58, 88, 61, 71, 79, 59),
            (62, 62, 62, 65, 73, 63, 62),
            (66, 66, 66, 35, 72, 80, 84),
            (19, 19, 19, 64, 18, 19, 19),
            (46, 46, 46, 47, 74, 46, 46),
        ),
    ),
    TraceTable(
        name="horizontal-black-ccw-double",
        group="horizontal-black-ccw-double",
        loco="double",
        structure="horizontal-black-ccw",
        entry="3(1) 7(1)",
        first_step=2,
        description="double locomotive running counter-clockwise around the sons of a black node",
        rows=_rows(
            _HORIZ_BLACK_CCW,
            (108, 111, 113, 90, 58, 58, 58),
            (65, 100, 105, 63, 62, 62, 62),
            (58, 78, 114, 98, 103, 79, 59),
            (62, 62, 65, 100, 105, 63, 62),
            (66, 66, 35, 41, 104, 109, 84),
            (19, 19, 64, 99, 18, 19, 19),
            (46, 46, 47, 101, 74, 46, 46),
        ),
    ),
    TraceTable(
        name="horizontal-black-cw-simple",
        group="horizontal-black-cw-simple",
        loco="simple",
        structure="horizontal-black-cw",
        entry="4(3)",
        description="simple locomotive running clockwise around a black node",
        rows=_rows(
            _HORIZ_BLACK_CW,
            (123, 129, 132, 121, 121, 121, 121),
            (124, 130, 133, 122, 122, 122, 122),
            (121, 128, 80, 84, 79, 66, 66),
            (122, 122, 124, 130, 133, 122, 122),
            (59, 59, 25, 135, 61, 71, 59),
            (46, 46, 74, 47, 46, 46, 46),
            (19, 19, 18, 64, 19, 19, 19),
        ),
    ),
    TraceTable(
        name="horizontal-black-cw-double",
        group="horizontal-black-cw-double",
        loco="double",
        structure="horizontal-black-cw",
        entry="4(3) 10(3)",
        description="double locomotive running clockwise around a black node",
        pinned=(("5(2)", 1),),
        notes=("the front cell enters 5(2) after the last tracked cell; its shift is the one under which the locomotive moves on",),
        rows=_rows(
            _HORIZ_BLACK_CW,
            (141, 145, 132, 121, 121, 121, 121),
            (142, 146, 133, 122, 122, 122, 122),
            (137, 144, 109, 103, 79, 66, 66),
            (122, 124, 142, 146, 133, 122, 122),
            (59, 25, 26, 149, 98, 71, 59),
            (46, 74, 101, 47, 46, 46, 46),
            (19, 18, 99, 64, 19, 19, 19),
        ),
    ),
    TraceTable(
        name="horizontal-white-ccw-simple",
        group="horizontal-white-ccw-simple",
        loco="simple",
        structure="horizontal-white-ccw",
        entry="2(1)",
        first_step=6,
        description="simple locomotive running counter-clockwise around a white node",
        rows=_rows(
            _HORIZ_WHITE_CCW,
            (58, 78, 83, 87, 90, 58),
            (62, 62, 65, 73, 63, 62),
            (59, 59, 58, 88, 61, 71),
            (62, 62, 62, 62, 65, 73),
            (66, 66, 66, 66, 35, 72),
            (153, 170, 172, 173, 174, 175),
            (167, 169, 171, 152, 152, 152),
        ),
    ),
    TraceTable(
        name="horizontal-white-ccw-double",
        group="horizontal-white-ccw-double",
        loco="double",
        structure="horizontal-white-ccw",
        entry="1(1) 2(1)",
        first_step=6,
        description="double locomotive running counter-clockwise around a white node",
        rows=_rows(
            _HORIZ_WHITE_CCW,
            (78, 108, 111, 113, 90, 58),
            (62, 65, 100, 105, 63, 62),
            (59, 58, 78, 114, 98, 103),
            (62, 62, 62, 65, 100, 105),
            (66, 66, 66, 35, 41, 104),
            (170, 184, 185, 186, 155, 187),
            (182, 183, 171, 152, 152, 152),
        ),
    ),
    TraceTable(
        name="horizontal-white-cw-simple",
        group="horizontal-white-cw-simple",
        loco="simple",
        structure="horizontal-white-cw",
        entry="4(2)",
        description="simple locomotive running clockwise around a white node",
        rows=_rows(
            _HORIZ_WHITE_CW,
            (123, 129, 132, 121, 121, 121, 121),
            (124, 130, 133, 122, 122, 122, 122),
            (121, 128, 80, 84, 79, 66, 66),
            (122, 122, 124, 130, 133, 122, 122),
            (59, 59, 25, 135, 61, 71, 59),
            (106, 175, 174, 173, 172, 170, 153),
            (152, 152, 152, 152, 171, 169, 167),
        ),
    ),
    TraceTable(
        name="horizontal-white-cw-double",
        group="horizontal-white-cw-double",
        loco="double",
        structure="horizontal-white-cw",
        entry="4(2) 10(2)",
        description="double locomotive running clockwise around a white node",
        rows=_rows(
            _HORIZ_WHITE_CW,
            (141, 145, 132, 121, 121, 121, 121),
            (142, 146, 133, 122, 122, 122, 122),
            (137, 144, 109, 103, 79, 66, 66),
            (122, 124, 142, 146, 133, 122, 122),
            (59, 25, 26, 149, 98, 71, 59),
            (187, 155, 186, 185, 184, 170, 153),
            (152, 152, 152, 171, 183, 182, 181),
        ),
    ),
    TraceTable(
        name="fixed-switch-left-simple",
        group="fixed-switch-simple",
        loco="simple",
        structure="fixed-switch",
        entry="12(1)",
        description="simple locomotive passively crossing the fixed switch from the left",
        rows=_rows(
            _FIXED,
            (25, 26, 27, 28, 25, 25),
            (35, 35, 90, 48, 35, 35),
            (191, 191, 193, 194, 195, 191),
            (25, 25, 25, 26, 27, 28),
            (12, 12, 15, 16, 17, 12),
            (19, 19, 19, 64, 196, 19),
        ),
    ),
    TraceTable(
        name="fixed-switch-right-simple",
        group="fixed-switch-simple",
        loco="simple",
        structure="fixed-switch",
        entry="8(5)",
        description="simple locomotive passively crossing the fixed switch from the right",
        rows=_rows(
            _FIXED,
            (25, 25, 132, 28, 25, 25),
            (35, 41, 42, 48, 35, 35),
            (191, 191, 200, 194, 195, 191),
            (25, 25, 25, 26, 27, 28),
            (12, 12, 12, 16, 17, 12),
            (19, 19, 18, 64, 196, 19),
        ),
    ),
    TraceTable(
        name="fixed-switch-left-double",
        group="fixed-switch-double",
        loco="double",
        structure="fixed-switch",
        entry="4(1) 12(1)",
        description="double locomotive passively crossing the fixed switch from the left",
        rows=_rows(
            _FIXED,
            (26, 29, 31, 28, 25, 25),
            (35, 90, 113, 48, 35, 35),
            (191, 193, 197, 198, 195, 191),
            (25, 25, 26, 29, 31, 28),
            (12, 15, 33, 34, 17, 12),
            (19, 19, 64, 199, 196, 19),
        ),
    ),
    TraceTable(
        name="fixed-switch-right-double",
        group="fixed-switch-double",
        loco="double",
        structure="fixed-switch",
        entry="3(5) 8(5)",
        description="double locomotive passively crossing the fixed switch from the right",
        rows=_rows(
            _FIXED,
            (25, 132, 145, 28, 25, 25),
            (41, 52, 53, 48, 35, 35),
            (191, 200, 201, 198, 195, 191),
            (25, 25, 26, 29, 31, 28),
            (12, 12, 16, 34, 17, 12),
            (19, 18, 99, 199, 196, 19),
        ),
    ),
    TraceTable(
        name="doubler",
        group="doubler",
        loco="simple",
        structure="doubler",
        entry="5(1)",
        description="simple locomotive turned into a double one",
        notes=("the fourth row is printed as 3(1), a milestone; its rules are those of the track cell 1(3)",),
        rows=_rows(
            _DOUBLER,
            (78, 83, 113, 90, 58, 58),
            (203, 207, 209, 212, 203, 203),
            (202, 206, 208, 211, 215, 202),
            (25, 25, 26, 29, 31, 28),
            (19, 19, 99, 18, 19, 19),
            (12, 12, 33, 34, 17, 12),
            (12, 12, 15, 33, 34, 17),
            (204, 134, 210, 214, 217, 217),
            (50, 50, 22, 213, 216, 50),
        ),
    ),
    TraceTable(
        name="fork",
        group="fork",
        loco="simple",
        structure="fork",
        entry="8(3)",
        description="simple locomotive split into two leaving in different directions",
        rows=_rows(
            _FORK,
            (35, 41, 42, 48, 90, 35),
            (35, 35, 41, 42, 225, 228),
            (35, 35, 35, 41, 42, 48),
            (218, 218, 62, 222, 226, 229),
            (66, 66, 66, 35, 72, 80),
            (219, 219, 219, 223, 227, 224),
        ),
    ),
    TraceTable(
        name="selector-simple",
        group="selector-simple",
        loco="simple",
        structure="selector",
        entry="8(3)",
        description="simple locomotive sent by the selector to the 1(4) branch",
        rows=_rows(
            _SELECTOR,
            (234, 240, 244, 249, 191, 234),
            (230, 230, 242, 247, 254, 260),
            (232, 232, 243, 248, 232, 232),
            (59, 59, 59, 25, 59, 59),
            (236, 236, 245, 251, 255, 261),
            (66, 66, 66, 35, 72, 80),
            (235, 241, 131, 250, 235, 235),
            (237, 237, 246, 252, 256, 237),
        ),
    ),
    TraceTable(
        name="selector-double",
        group="selector-double",
        loco="double",
        structure="selector",
        entry="3(3) 8(3)",
        description="double locomotive sent by the selector to the 1(2) branch",
        rows=_rows(
            _SELECTOR,
            (240, 265, 267, 228, 234, 234),
            (230, 242, 266, 271, 275, 230),
            (232, 243, 193, 273, 277, 232),
            (59, 59, 25, 135, 61, 71),
            (236, 245, 269, 236, 236, 236),
            (66, 66, 35, 66, 66, 66),
            (241, 174, 268, 274, 235, 235),
            (237, 246, 270, 237, 237, 237),
        ),
    ),
    TraceTable(
        name="controller-black-passage",
        group="controller-passage",
        loco="simple",
        structure="controller",
        entry="8(4)",
        setting="1(1)",
        description="locomotive crossing the controller of a flip-flop while 1(1) is black",
        rows=_rows(
            _CONTROL,
            (25, 25, 25, 26, 311),
            (58, 58, 78, 83, 309),
            (35, 41, 42, 48, 35),
            (143, 143, 143, 266, 312),
            (294, 294, 294, 306, 310),
            (295, 295, 295, 307, 295),
        ),
    ),
    TraceTable(
        name="controller-white-passage",
        group="controller-passage",
        loco="simple",
        structure="controller",
        entry="8(4)",
        description="locomotive stopped by the controller of a flip-flop while 1(1) is white",
        rows=_rows(
            _CONTROL,
            (59, 59, 59),
            (279, 279, 315),
            (35, 41, 42),
            (127, 127, 127),
            (280, 280, 280),
            (281, 281, 281),
        ),
    ),
    TraceTable(
        name="controller-black-to-white",
        group="controller-signal",
        loco="simple",
        structure="controller",
        entry="16(1)",
        setting="1(1)",
        description="signal turning the controller's cell 1(1) from black to white",
        rows=_rows(
            _SIGNAL,
            (41, 42, 48, 35),
            (295, 300, 303, 281),
            (58, 58, 191, 279),
            (143, 143, 143, 127),
            (294, 294, 302, 280),
            (299, 299, 190, 286),
        ),
    ),
    TraceTable(
        name="controller-white-to-black",
        group="controller-signal",
        loco="simple",
        structure="controller",
        entry="16(1)",
        description="signal turning the controller's cell 1(1) from white to black",
        rows=_rows(
            _SIGNAL,
            (41, 42, 48, 35),
            (281, 287, 291, 295),
            (279, 279, 289, 58),
            (127, 127, 127, 143),
            (280, 280, 290, 294),
            (286, 286, 293, 299),
        ),
    ),
    TraceTable(
        name="sensor-white-passage",
        group="sensor-white",
        loco="simple",
        structure="controller-sensor",
        entry="12(2)",
        description="locomotive crossing the controller-sensor of a passive memory switch while the sensor is white",
        notes=(
            "the second row is printed as 2(2); its rules are those of the track cell 1(2)",
            "the fourth row is printed as 4(1); its rules are those of the track cell 1(4), entered at step 3",
        ),
        rows=_rows(
            _SENSOR_WHITE,
            (26, 27, 28, 25, 25, 25),
            (234, 322, 244, 249, 336, 228),
            (317, 317, 325, 328, 25, 289),
            (321, 321, 321, 332, 339, 341),
            (35, 35, 35, 35, 41, 42),
            (127, 127, 327, 247, 337, 143),
            (280, 280, 326, 329, 334, 294),
        ),
    ),
    TraceTable(
        name="sensor-black-passage",
        group="sensor-black",
        loco="simple",
        structure="controller-sensor",
        entry="12(2)",
        setting="1(1)",
        description="locomotive crossing the controller-sensor of a passive memory switch while the sensor is black",
        rows=_rows(
            _SENSOR_BLACK,
            (26, 27, 28, 25),
            (228, 343, 346, 228),
            (289, 289, 344, 289),
            (143, 143, 347, 143),
            (294, 294, 345, 294),
        ),
    ),
    TraceTable(
        name="sensor-black-signal",
        group="sensor-black",
        loco="simple",
        structure="controller-sensor",
        entry="16(1)",
        setting="1(1)",
        description="signal turning a black sensor white",
        rows=_rows(
            _SENSOR_SIGNAL,
            (41, 42, 48, 35),
            (295, 300, 303, 281),
            (143, 143, 143, 127),
            (294, 294, 302, 280),
        ),
    ),
)

TRACES_BY_NAME: Dict[str, TraceTable] = {t.name: t for t in TRACES}


def _cells(text: str) -> Tuple[str, ...]:
    return tuple(text.replace(",", " ").split())


# centres of the track elements, in the order the locomotive visits them
TRACKS: Dict[str, Tuple[str, ...]] = {
    "vertical-down": _cells("4(1) 1(1) 0(0) 1(3) 3(3)"),
    "doubler": _cells("2(1) 1(1) 0(0) 1(3) 3(3) 8(3)"),
}

_BLACK_CW = _cells(
    "13(4) 11(3) 28(3) 26(3) 8(3) 20(3) 18(3) 5(3) 3(2) 6(2) 15(2) 13(2) 11(1) 28(1) 26(1) 8(1) "
    "19(1) 49(1) 47(1) 16(1) 41(1) 39(1) 13(1) 2(1) 1(1) 0(0) 1(3) 2(4)"
)
_WHITE_CW = _cells(
    "13(3) 11(2) 28(2) 26(2) 8(2) 20(2) 18(2) 5(2) 3(1) 7(1) 5(1) 3(5) 6(5) 15(5) 13(5) 11(4) 28(4) "
    "26(4) 8(4) 19(4) 18(3) 6(3) 2(3) 1(2) 0(0) 1(3) 1(4) 2(4) 5(4) 4(3)"
)


def _swap(cells: Tuple[str, ...], old: str, new: str) -> Tuple[str, ...]:
    table = dict(zip(old.split(), new.split()))
    return tuple(table.get(c, c) for c in cells)


_SIGNAL_MILESTONES = "41(1) 44(1) 15(1) 18(1) 2(5)"
_VERTICAL_SUPPORT = "2(2) 5(2) 13(2) 2(3) 7(3)"

STRUCTURES: Dict[str, Structure] = {
    s.name: s
    for s in (
        Structure(
            "vertical-down",
            milestones=_cells("1(2) 1(4)"),
            support=_cells(f"2(1) 10(1) 31(1) 86(1) {_VERTICAL_SUPPORT} 4(3) 9(3) 20(3) 22(3)"),
        ),
        Structure(
            "vertical-up",
            milestones=_cells("1(2) 1(5)"),
            support=_cells(f"3(1) 11(1) 32(1) {_VERTICAL_SUPPORT} 10(3) 20(3) 23(3) 57(3) 2(4)"),
        ),
        Structure("horizontal-black-cw", milestones=_BLACK_CW),
        Structure(
            "horizontal-black-ccw",
            milestones=_swap(
                _BLACK_CW,
                "13(4) 11(3) 8(3) 5(3) 3(2) 6(2) 11(1) 8(1) 19(1) 16(1) 13(1)",
                "6(4) 12(3) 9(3) 6(3) 4(2) 7(2) 12(1) 9(1) 20(1) 17(1) 14(1)",
            ),
            notes=("the replaced milestones start with 5(4), a track cell; the first isolated milestone 13(4) is meant",),
        ),
        Structure("horizontal-white-cw", milestones=_WHITE_CW),
        Structure(
            "horizontal-white-ccw",
            milestones=_swap(
                _WHITE_CW,
                "13(3) 11(2) 8(2) 5(2) 3(1) 3(5) 6(5) 11(4) 8(4) 19(4)",
                "14(3) 12(2) 9(2) 6(2) 4(1) 4(5) 7(5) 12(4) 9(4) 20(4)",
            ),
        ),
        Structure(
            "fixed-switch",
            milestones=_cells("2(1) 1(2) 1(4)"),
            support=_cells(f"10(1) 31(1) 86(1) {_VERTICAL_SUPPORT} 4(3) 9(3) 2(5) 7(5) 10(5) 20(5) 23(5) 57(5)"),
            notes=(
                "the black neighbours of 0(0) are given as 2, 4, 6, 7, 8 and 10; "
                "its conservative rule 191 has them at 2, 5, 6, 8, 9 and 10 and is followed",
            ),
        ),
        Structure(
            "doubler",
            milestones=_cells("4(5) 15(1) 1(5) 7(1) 3(1) 2(2) 1(2) 1(4) 2(3) 4(3) 7(3) 9(3)"),
            support=_cells("14(1)"),
        ),
        Structure(
            "fork",
            milestones=_cells(
                "20(3) 23(3) 7(3) 10(3) 2(3) 2(4) 1(2) 1(5) 2(2) 3(1) 5(2) 11(1) 13(2) 32(1) "
                "4(4) 6(5) 3(5) 19(5) 8(5) 53(5)"
            ),
            support=_cells("57(3)"),
        ),
        Structure(
            "selector",
            milestones=_cells(
                "20(3) 23(3) 7(3) 10(3) 2(3) 2(4) 1(1) 6(2) 4(1) 14(2) 12(1) 35(2) 1(5) 6(5) 3(5) 19(5) 8(5) 53(5) "
                "5(3) 3(2) 10(2) 5(4) 7(4) 18(4) 4(4) 10(4)"
            ),
            support=_cells("57(3)"),
        ),
        Structure(
            "controller",
            milestones=_cells(
                "54(4) 57(4) 20(4) 23(4) 7(4) 10(4) 2(4) 2(5) 1(3) 4(2) 2(2) 9(2) 7(2) 20(2) 22(2) "
                f"{_SIGNAL_MILESTONES} 4(1) 10(1) 6(2)"
            ),
            support=_cells("43(1) 5(1)"),
        ),
        Structure(
            "controller-sensor",
            milestones=_cells(
                "34(3) 86(2) 13(3) 31(2) 5(3) 10(2) 2(3) 2(2) 2(5) 3(4) 5(5) 11(4) 13(5) 32(4) 34(5) 87(4) "
                f"{_SIGNAL_MILESTONES} 7(2) 6(2) 4(1) 10(1) 2(4)"
            ),
            support=_cells("43(1) 5(1)"),
        ),
    )
}
