import os
from pathlib import Path


def _env_override(env_var: str) -> Path | None:
    if value := os.environ.get(env_var):
        return Path(value)
    return None


def home() -> Path:
    return _env_override("SPCOB_HOME") or Path.home() / ".spcob"


def config_path() -> Path:
    return home() / "config.yaml"


def logs_dir() -> Path:
    return home() / "logs"
