#!/usr/bin/env python3
"""
heunlame MCP server launcher

Works from any directory: puts the project on sys.path, reads the project's
.env, and refuses to start when a HEUNLAME_* override cannot be parsed.
"""
import os
import sys
from pathlib import Path

project_root = Path(__file__).parent.resolve()

sys.path.insert(0, str(project_root))
os.environ['PYTHONPATH'] = str(project_root)

from dotenv import load_dotenv
load_dotenv(project_root / '.env')

from heunlame.utils.config import ENV_PREFIX, load_settings, set_settings
from heunlame.utils.errors import ConfigError


def launch() -> int:
    try:
        settings = load_settings()
    except ConfigError as exc:
        print(f"❌ {exc}", file=sys.stderr)
        return 2
    set_settings(settings)
    overridden = {k: v for k, v in settings.as_dict().items() if k.upper() in _env_names()}
    if overridden:
        print(f"⚙️  Tolerance overrides: {overridden}", file=sys.stderr)

    from heunlame.server import main
    main()
    return 0


def _env_names():
    return {key[len(ENV_PREFIX):] for key in os.environ if key.startswith(ENV_PREFIX)}


if __name__ == "__main__":
    sys.exit(launch())
