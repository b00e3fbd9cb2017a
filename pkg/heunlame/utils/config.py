"""
Configuration for heunlame

Numeric tolerances used across the library. Defaults can be overridden from
the environment (or a .env file) with HEUNLAME_<NAME>, e.g.

    HEUNLAME_RESIDUAL_TOL=1e-9
    HEUNLAME_VERBOSE=1
"""

import os
from dataclasses import dataclass, fields, replace
from typing import Any, Dict, Optional

from dotenv import load_dotenv

from .errors import ConfigError

ENV_PREFIX = "HEUNLAME_"

_TRUE = {"1", "true", "yes", "on"}
_FALSE = {"0", "false", "no", "off", ""}


@dataclass(frozen=True)
class Settings:
    """
    Tolerances and limits shared by every module.

    Attributes:
        snap_tol: distance within which l, m or Heun parameters are snapped
            to an integer / half-integer, and reduction constraints are
            considered satisfied
        truncation_tol: |gamma_{N+1}| below which a series is considered finite
        residual_tol: ODE-residual acceptance threshold
        spectrum_tol: absolute tolerance used when matching known energies
        cluster_tol: relative distance under which eigenvalues are merged
        series_tol: adaptive-series stopping tolerance (relative to the partial sum)
        bisection_tol: bracket width at which bisection stops
        max_terms: hard cap on the number of series terms
        verbose: print progress lines to stderr
    """

    snap_tol: float = 1e-12
    truncation_tol: float = 1e-12
    residual_tol: float = 1e-8
    spectrum_tol: float = 1e-10
    cluster_tol: float = 1e-9
    series_tol: float = 1e-14
    bisection_tol: float = 1e-12
    max_terms: int = 4000
    verbose: bool = False

    def as_dict(self) -> Dict[str, Any]:
        return {f.name: getattr(self, f.name) for f in fields(self)}


def _parse(name: str, raw: str, kind: type) -> Any:
    if kind is bool:
        lowered = raw.strip().lower()
        if lowered in _TRUE:
            return True
        if lowered in _FALSE:
            return False
        raise ConfigError(f"{name} must be a boolean flag (got {raw!r})")
    try:
        value = kind(float(raw)) if kind is int else kind(raw)
    except ValueError:
        raise ConfigError(f"{name} must be a number (got {raw!r})") from None
    if value <= 0:
        raise ConfigError(f"{name} must be positive (got {raw!r})")
    return value


def load_settings(env: Optional[Dict[str, str]] = None) -> Settings:
    """
    Build Settings from defaults plus HEUNLAME_* overrides.

    Args:
        env: mapping to read instead of os.environ (tests pass a dict)

    Returns:
        A frozen Settings instance
    """
    if env is None:
        load_dotenv()
        env = dict(os.environ)

    overrides: Dict[str, Any] = {}
    for f in fields(Settings):
        key = ENV_PREFIX + f.name.upper()
        if key in env:
            overrides[f.name] = _parse(key, env[key], type(f.default))
    return Settings(**overrides)


def override_settings(base: Settings, **values: Any) -> Settings:
    """Return a copy of base with NAME=VALUE overrides (strings are parsed)."""
    known = {f.name: type(f.default) for f in fields(Settings)}
    parsed: Dict[str, Any] = {}
    for name, value in values.items():
        if name not in known:
            raise ConfigError(
                f"Unknown tolerance {name!r}; expected one of: {', '.join(sorted(known))}"
            )
        parsed[name] = _parse(name, value, known[name]) if isinstance(value, str) else value
    return replace(base, **parsed)


# Singleton instance for easy access
_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Get or create the process-wide Settings."""
    global _settings
    if _settings is None:
        _settings = load_settings()
    return _settings


def set_settings(settings: Settings) -> None:
    """Install settings for the rest of the process (used by the CLI)."""
    global _settings
    _settings = settings
