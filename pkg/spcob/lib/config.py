import os
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any

import yaml

from spcob.core.errors import DomainError
from spcob.core.types import FORMATS, OutputFormat
from spcob.lib import paths

_cache: "Config | None" = None
_cache_mtime: float = 0.0
_cache_path: Path | None = None

FORMAT_ENV = "SPCOB_FORMAT"


@dataclass
class SuiteConfig:
    max_r: int = 3
    max_n: int = 6
    max_deg: int = 8
    workers: int = 4


@dataclass
class LogConfig:
    max_lines: int = 500


@dataclass
class Config:
    format: OutputFormat = "json"
    suite: SuiteConfig = field(default_factory=SuiteConfig)
    logs: LogConfig = field(default_factory=LogConfig)


def _known(cls: type, data: dict[str, Any]) -> dict[str, Any]:
    names = {f.name for f in fields(cls)}
    return {k: v for k, v in data.items() if k in names}


def _from_dict(data: dict[str, Any]) -> Config:
    fmt = data.get("format", "json")
    if fmt not in FORMATS:
        raise DomainError(f"config.yaml: unknown format {fmt!r}")
    return Config(
        format=fmt,
        suite=SuiteConfig(**_known(SuiteConfig, data.get("suite") or {})),
        logs=LogConfig(**_known(LogConfig, data.get("logs") or {})),
    )


def load() -> Config:
    global _cache, _cache_mtime, _cache_path
    p = paths.config_path()
    if not p.exists():
        return Config()
    try:
        mtime = p.stat().st_mtime
    except OSError:
        return Config()
    if _cache is not None and p == _cache_path and mtime == _cache_mtime:
        return _cache
    data: dict[str, Any] = yaml.safe_load(p.read_text()) or {}
    _cache = _from_dict(data)
    _cache_mtime = mtime
    _cache_path = p
    return _cache


def save(cfg: Config) -> None:
    global _cache, _cache_mtime, _cache_path
    p = paths.config_path()
    p.parent.mkdir(parents=True, exist_ok=True)
    p.write_text(yaml.safe_dump(asdict(cfg), default_flow_style=False))
    _cache = cfg
    _cache_path = p
    try:
        _cache_mtime = p.stat().st_mtime
    except OSError:
        _cache_mtime = 0.0


def output_format(flag: str | None = None) -> OutputFormat:
    """Flag beats SPCOB_FORMAT beats config.yaml."""
    choice = flag or os.environ.get(FORMAT_ENV) or load().format
    if choice not in FORMATS:
        raise DomainError(f"unknown output format {choice!r} (expected json or text)")
    return choice  # type: ignore[return-value]
