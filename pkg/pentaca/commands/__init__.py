from . import grid, render, rules, run, scenario, verify  # noqa: F401

GROUPS = (rules, grid, run, verify, render, scenario)
