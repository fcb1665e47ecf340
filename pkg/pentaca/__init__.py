"""Two-state cellular automaton on the pentagrid."""

__version__ = "0.1.0"
