"""Utility modules for heunlame"""
from .config import Settings, get_settings, load_settings, override_settings, set_settings
from .console import status, warn
from .errors import (
    ConfigError,
    DivergenceError,
    DomainError,
    HeunlameError,
    PivotError,
    PoleError,
    SolverError,
    SpectrumError,
)
from .jets import Jet, lift

__all__ = [
    'Settings',
    'get_settings',
    'load_settings',
    'override_settings',
    'set_settings',
    'status',
    'warn',
    'HeunlameError',
    'ConfigError',
    'DomainError',
    'PoleError',
    'DivergenceError',
    'PivotError',
    'SolverError',
    'SpectrumError',
    'Jet',
    'lift',
]
