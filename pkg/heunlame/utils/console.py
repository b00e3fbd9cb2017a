"""
Console status lines.

Progress messages keep the emoji-prefixed one-line style. They go to stderr
so stdout stays clean for CSV/JSON tables and the MCP stdio transport.
"""

import sys

from .config import get_settings


def status(message: str, emoji: str = "🔍") -> None:
    """Print a progress line when verbose output is enabled."""
    if get_settings().verbose:
        print(f"{emoji} {message}", file=sys.stderr)


def warn(message: str) -> None:
    """Always print a warning line."""
    print(f"⚠️  {message}", file=sys.stderr)
