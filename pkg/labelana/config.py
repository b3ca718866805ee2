"""Configuration loading for labelana."""
from __future__ import annotations

import logging
import os
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any

import voluptuous as vol
import yaml

from .const import (
    COVER_MODES,
    DEFAULT_COVER_MODE,
    DEFAULT_MAX_ATOMS,
    DEFAULT_MAX_EDGES,
    DEFAULT_MAX_LOOP_WORDS,
    DEFAULT_MAX_VERTICES,
    DEFAULT_OUTPUT_FORMAT,
    DEFAULT_SEED,
    DEFAULT_WORD_BOUND_MULTIPLIER,
    ENV_MAX_ATOMS,
    OUTPUT_FORMATS,
)
from .exceptions import ValidationError

_LOGGER = logging.getLogger(__name__)

_POSITIVE = vol.All(int, vol.Range(min=1))

CONFIG_SCHEMA = vol.Schema(
    {
        vol.Optional("max_atoms"): _POSITIVE,
        vol.Optional("word_bound_multiplier"): _POSITIVE,
        vol.Optional("cover_mode"): vol.In(COVER_MODES),
        vol.Optional("output_format"): vol.In(OUTPUT_FORMATS),
        vol.Optional("allow_epsilon_cover"): bool,
        vol.Optional("seed"): vol.All(int, vol.Range(min=0)),
        vol.Optional("max_vertices"): _POSITIVE,
        vol.Optional("max_edges"): _POSITIVE,
        vol.Optional("max_loop_words"): _POSITIVE,
    }
)


@dataclass(frozen=True)
class Config:
    """Analysis limits and output options."""

    max_atoms: int = DEFAULT_MAX_ATOMS
    word_bound_multiplier: int = DEFAULT_WORD_BOUND_MULTIPLIER
    cover_mode: str = DEFAULT_COVER_MODE
    output_format: str = DEFAULT_OUTPUT_FORMAT
    allow_epsilon_cover: bool = False
    seed: int = DEFAULT_SEED
    max_vertices: int = DEFAULT_MAX_VERTICES
    max_edges: int = DEFAULT_MAX_EDGES
    max_loop_words: int = DEFAULT_MAX_LOOP_WORDS

    def with_overrides(self, **overrides: Any) -> Config:
        """Return a copy with validated overrides; None values are ignored."""
        values = {key: value for key, value in overrides.items() if value is not None}
        return replace(self, **_validate(values, "overrides"))


def _validate(data: Any, origin: str) -> dict[str, Any]:
    try:
        return CONFIG_SCHEMA(data)
    except vol.Invalid as err:
        raise ValidationError("Config", origin, f"invalid configuration in {origin}: {err}") from err


def _read_yaml(path: Path) -> dict[str, Any]:
    """Read a configuration file; unreadable files fall back to defaults."""
    try:
        with open(path, encoding="utf-8") as f:
            data = yaml.safe_load(f)
    except yaml.YAMLError as err:
        _LOGGER.error("Error parsing %s: %s", path, err)
        return {}
    except OSError as err:
        _LOGGER.error("Error reading %s: %s", path, err)
        return {}

    if not data:
        return {}
    values = _validate(data, str(path))
    _LOGGER.info("Loaded %d setting(s) from %s", len(values), path)
    return values


def load_config(path: Path | None = None, **overrides: Any) -> Config:
    """Build a Config from defaults, a YAML file, the environment and overrides."""
    values: dict[str, Any] = {}
    if path is not None:
        values.update(_read_yaml(path))

    env_atoms = os.environ.get(ENV_MAX_ATOMS)
    if env_atoms:
        try:
            values["max_atoms"] = int(env_atoms)
        except ValueError as err:
            raise ValidationError("Config", ENV_MAX_ATOMS, f"{ENV_MAX_ATOMS} must be an integer") from err

    values.update({key: value for key, value in overrides.items() if value is not None})

    return Config(**_validate(values, "settings"))
