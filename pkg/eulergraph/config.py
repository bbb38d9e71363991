"""Configuration management for eulergraph."""

import logging
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import yaml
from dotenv import load_dotenv

from .exceptions import ConfigError

load_dotenv()


def _env_or_default(env_name: str, default_value: object) -> str:
    """Return environment value or fallback as string."""
    value = os.environ.get(env_name)
    if value is not None:
        return value
    return str(default_value)


def _as_int(name: str, raw: object, minimum: int = 0) -> int:
    try:
        value = int(str(raw))
    except ValueError as exc:
        raise ConfigError(f"{name} must be an integer, got {raw!r}", setting=name) from exc
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}", setting=name)
    return value


@dataclass
class Config:
    """Runtime settings for the pipelines and the CLI."""

    threads: int = 0
    enumeration_limit: int = 10000
    taut_search_limit: Optional[int] = None
    output_format: str = "json"
    log_level: str = "WARNING"

    @staticmethod
    def _resolve_yaml_path(config_path: Optional[str] = None) -> Optional[Path]:
        """Resolve config.yaml path from explicit path or default search paths."""
        if config_path:
            path = Path(config_path)
            return path if path.exists() else None

        search_paths = [
            Path.cwd() / "config.yaml",
            Path(__file__).parent.parent / "config.yaml",
        ]
        for path in search_paths:
            if path.exists():
                return path
        return None

    @classmethod
    def from_yaml(cls, config_path: Optional[str] = None) -> "Config":
        """Load configuration from YAML file and environment variables.

        Args:
            config_path: Path to config.yaml file. If None, searches in current
                        directory and package directory.

        Returns:
            Config instance with merged settings.
        """
        config_data = {
            "runtime": {"threads": 0},
            "enumeration": {"limit": 10000},
            "taut": {"search_limit": None},
            "output": {"format": "json"},
            "logging": {"level": "WARNING"},
        }

        yaml_path = cls._resolve_yaml_path(config_path)
        if yaml_path and yaml_path.exists():
            with open(yaml_path, "r", encoding="utf-8") as f:
                loaded = yaml.safe_load(f) or {}
            for section, values in config_data.items():
                if isinstance(loaded.get(section), dict):
                    values.update(loaded[section])

        search_limit = config_data["taut"].get("search_limit")
        output_format = str(config_data["output"].get("format", "json"))
        if output_format not in ("json", "human"):
            raise ConfigError(f"output.format must be 'json' or 'human', got {output_format!r}")

        # Environment variables override YAML
        log_level = _env_or_default("EULERGRAPH_LOG_LEVEL", config_data["logging"].get("level", "WARNING"))
        if not isinstance(logging.getLevelName(log_level.upper()), int):
            raise ConfigError(f"unknown log level {log_level!r}", setting="logging.level")

        return cls(
            threads=_as_int(
                "EULERGRAPH_THREADS",
                _env_or_default("EULERGRAPH_THREADS", config_data["runtime"].get("threads", 0)),
            ),
            enumeration_limit=_as_int(
                "EULERGRAPH_ENUM_LIMIT",
                _env_or_default("EULERGRAPH_ENUM_LIMIT", config_data["enumeration"].get("limit", 10000)),
                minimum=1,
            ),
            taut_search_limit=None if search_limit is None else _as_int("taut.search_limit", search_limit, 1),
            output_format=output_format,
            log_level=log_level.upper(),
        )

    def worker_count(self) -> int:
        """Number of worker threads; 0 in the settings means one per CPU."""
        if self.threads == 0:
            return os.cpu_count() or 1
        return self.threads
