"""Utility functions for meander-py."""

import os
import sys
from pathlib import Path
from typing import Optional, TextIO


def get_config_dir() -> Path:
    """Get platform-appropriate config directory."""
    if sys.platform == "win32":
        config_home = os.environ.get("APPDATA")
        if config_home:
            return Path(config_home) / "meander-py"

    config_home = os.environ.get("XDG_CONFIG_HOME")
    if config_home:
        return Path(config_home) / "meander-py"

    return Path.home() / ".config" / "meander-py"


def format_bool(value: Optional[bool]) -> str:
    """Lowercase true/false, `unknown` for None."""
    if value is None:
        return "unknown"
    return "true" if value else "false"


def is_terminal(stream: TextIO) -> bool:
    """True when the stream is an interactive terminal."""
    isatty = getattr(stream, "isatty", None)
    try:
        return bool(isatty and isatty())
    except ValueError:
        return False
