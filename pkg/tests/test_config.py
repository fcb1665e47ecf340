from pathlib import Path

from pentaca.config import PACKAGED_RULES, Settings, rules_path


def test_fields() -> None:
    assert set(Settings.model_fields) == {
        "log_level",
        "pentaca_rules",
        "solver_budget",
        "render_segments",
        "patch_radius",
    }


def test_budget_from_environment(monkeypatch) -> None:
    monkeypatch.setenv("SOLVER_BUDGET", "12")
    assert Settings(_env_file=None).solver_budget == 12


def test_rules_path_precedence(tmp_path) -> None:
    env = Settings(_env_file=None, pentaca_rules=tmp_path / "env.txt")
    assert rules_path(Path("flag.txt"), env) == Path("flag.txt")
    assert rules_path(None, env) == tmp_path / "env.txt"
    assert rules_path(None, Settings(_env_file=None, pentaca_rules=None)) == PACKAGED_RULES
