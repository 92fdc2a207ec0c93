"""Configuration management."""

import os
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Optional, Tuple

from dotenv import load_dotenv

from .exceptions import UsageError

# Load environment variables from .env file
load_dotenv()

MAX_SWEEP_WIDTH = 64
OUTPUT_MODES = ("human", "json")

_RANGE_RE = re.compile(r"^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$")


def get_catalog_path() -> Optional[Path]:
    """Get the catalog file override, or None for the built-in catalog."""
    value = os.getenv("KNOTLAB_CATALOG")
    return Path(value) if value else None


def get_output_format() -> str:
    """Get the default output mode."""
    return os.getenv("KNOTLAB_OUTPUT", "human").lower()


def get_log_level() -> str:
    """Get the logging level name."""
    return os.getenv("KNOTLAB_LOG_LEVEL", "INFO").upper()


def get_workers() -> int:
    """Get the number of worker processes used by sweeps."""
    value = os.getenv("KNOTLAB_WORKERS", "1")
    try:
        return int(value)
    except ValueError:
        raise UsageError(f"KNOTLAB_WORKERS must be an integer, got '{value}'")


def parse_k_range(text: str) -> Tuple[int, int]:
    """Parse an inclusive ``lo..hi`` range; a bare integer means ``k..k``."""
    match = _RANGE_RE.match(text)
    if match:
        return int(match.group(1)), int(match.group(2))
    try:
        value = int(text)
    except ValueError:
        raise UsageError(f"Malformed k range '{text}', expected lo..hi")
    return value, value


@dataclass
class CliConfig:
    """Settings shared by every command."""

    catalog_path: Optional[Path] = None
    output: str = "human"
    k_range: Tuple[int, int] = (1, 1)
    workers: int = 1

    def __post_init__(self):
        lo, hi = self.k_range
        if lo > hi:
            raise UsageError(f"Empty k range {lo}..{hi}")
        if hi - lo > MAX_SWEEP_WIDTH:
            raise UsageError(
                f"k range {lo}..{hi} is wider than {MAX_SWEEP_WIDTH}"
            )
        if self.output not in OUTPUT_MODES:
            raise UsageError(f"Unknown output mode '{self.output}'")
        if self.workers < 1:
            raise UsageError("workers must be at least 1")

    @classmethod
    def from_env(cls, **overrides) -> "CliConfig":
        """Build a config from the environment, letting explicit values win."""
        values = {
            "catalog_path": get_catalog_path(),
            "output": get_output_format(),
            "workers": get_workers(),
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)
