# pentaca\errors.py
from typing import Optional


class PentacaError(Exception):
    """Root of every error raised by the package."""


class RuleParseError(PentacaError):
    def __init__(self, line_no: int, text: str, reason: str):
        self.line_no = line_no
        self.text = text
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}: {text!r}")


class CoordinateError(PentacaError, ValueError):
    pass


class PatchError(PentacaError):
    pass


class CorrespondenceError(PentacaError):
    pass


class BoundaryError(PentacaError):
    """A neighbour lies outside the mapped part of the patch."""


class NoRule(PentacaError):
    def __init__(self, cell, state: str, word: str, step: Optional[int] = None):
        self.cell = cell
        self.state = state
        self.word = word
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(f"no rule for {cell} in state {state} with neighbours {word}{where}")


class BoundaryBreach(PentacaError):
    def __init__(self, cells, depth: int):
        self.cells = sorted(cells)
        self.depth = depth
        shown = ", ".join(str(c) for c in self.cells[:5])
        super().__init__(f"black cells too close to the window boundary (depth {depth}): {shown}")


class RunError(PentacaError):
    def __init__(self, step: int, cause: PentacaError):
        self.step = step
        self.cause = cause
        super().__init__(f"step {step}: {cause}")


class NoFit(PentacaError):
    pass


class ScenarioError(PentacaError):
    pass


class Ambiguous(PentacaError):
    """Two orientation choices both reproduce the trace but run differently."""

    def __init__(self, step: int, cells):
        self.step = step
        self.cells = sorted(cells)
        shown = ", ".join(str(c) for c in self.cells[:5])
        super().__init__(f"orientations are ambiguous: runs differ at step {step} in {shown}")
