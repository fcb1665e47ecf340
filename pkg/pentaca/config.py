# pentaca\config.py
from functools import lru_cache
from pathlib import Path
from typing import Optional

from pydantic_settings import BaseSettings

PACKAGED_RULES = Path(__file__).resolve().parent / "data" / "rules.txt"


class Settings(BaseSettings):
    log_level: str = "INFO"

    # PENTACA_RULES: default rule file for every command taking --rules
    pentaca_rules: Optional[Path] = None

    solver_budget: int = 200_000
    render_segments: int = 16
    patch_radius: int = 6

    class Config:
        env_file = ".env"
        env_prefix = ""
        case_sensitive = False


@lru_cache
def get_settings() -> Settings:
    return Settings()


def rules_path(explicit: Optional[Path] = None, settings: Optional[Settings] = None) -> Path:
    """--rules flag first, then PENTACA_RULES, then the packaged table."""
    if explicit is not None:
        return Path(explicit)
    settings = settings or get_settings()
    if settings.pentaca_rules is not None:
        return settings.pentaca_rules
    return PACKAGED_RULES
