"""Configuration and environment settings.

Every ``FREE_TUPLES_*`` variable is optional. Values already present in the
environment win over the ones in ``.env``.
"""

import os
from pathlib import Path
from typing import Optional

from dotenv import find_dotenv, load_dotenv

PROJECT_ROOT = Path(__file__).resolve().parent.parent


def load_environment(env_file: Optional[Path] = None) -> Optional[Path]:
    """Load the first ``.env`` found: the given file, the project root, then upward from cwd."""
    candidates = [env_file, PROJECT_ROOT / ".env", find_dotenv(usecwd=True) or None]
    for candidate in candidates:
        if candidate and Path(candidate).is_file():
            load_dotenv(candidate, override=False)
            return Path(candidate)
    return None


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


def _clamp(value: int, low: int, high: int) -> int:
    return max(low, min(high, value))


class Config:
    """Settings read from the environment when the object is built."""

    def __init__(self) -> None:
        # Default of the CLI --max-degree cap
        self.MAX_DEGREE: int = _env_int("FREE_TUPLES_MAX_DEGREE", 8)
        # Largest k accepted by enumerate_nc (Catalan(14) ~ 2.7M partitions)
        self.NC_CEILING: int = _clamp(_env_int("FREE_TUPLES_NC_CEILING", 14), 12, 14)
        self.LOG_LEVEL: str = os.getenv("FREE_TUPLES_LOG_LEVEL", "WARNING").upper()
        # Seed for generated verification inputs
        self.SEED: int = _env_int("FREE_TUPLES_SEED", 1995)
        # The verification graph loops once per identity
        self.RECURSION_LIMIT: int = _env_int("FREE_TUPLES_RECURSION_LIMIT", 200)


load_environment()
config = Config()
