"""
Configuration for scgraph runs.

Values come from the environment (a `.env` file at the project root is
loaded automatically):

  SCGRAPH_MAX_N       overrides both detector guards (skew, symmetric)
  SCGRAPH_ENUM_MAX_N  overrides the enumeration guard
"""

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

from scgraph.errors import ConfigError, GuardExceededError

load_dotenv()

DEFAULT_ENUM_MAX_N = 13
DEFAULT_SKEW_MAX_N = 24
DEFAULT_SYMMETRIC_MAX_N = 20


def _positive_int(name: str, raw: str) -> int:
    try:
        value = int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ConfigError(f"{name} must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Guards:
    """Largest vertex count each exhaustive routine accepts."""

    enum_max_n: int = DEFAULT_ENUM_MAX_N
    skew_max_n: int = DEFAULT_SKEW_MAX_N
    symmetric_max_n: int = DEFAULT_SYMMETRIC_MAX_N

    def __post_init__(self):
        for name in ('enum_max_n', 'skew_max_n', 'symmetric_max_n'):
            if getattr(self, name) < 1:
                raise ConfigError(f"guard {name} must be positive")

    @classmethod
    def from_env(cls) -> 'Guards':
        enum_max_n = DEFAULT_ENUM_MAX_N
        skew_max_n = DEFAULT_SKEW_MAX_N
        symmetric_max_n = DEFAULT_SYMMETRIC_MAX_N

        raw = os.getenv('SCGRAPH_MAX_N')
        if raw:
            skew_max_n = symmetric_max_n = _positive_int('SCGRAPH_MAX_N', raw)

        raw = os.getenv('SCGRAPH_ENUM_MAX_N')
        if raw:
            enum_max_n = _positive_int('SCGRAPH_ENUM_MAX_N', raw)

        return cls(enum_max_n, skew_max_n, symmetric_max_n)


def check_guard(n: int, limit: Optional[int], what: str) -> None:
    """Raise GuardExceededError if n is above limit."""
    if limit is not None and n > limit:
        raise GuardExceededError(f"{what}: n={n} exceeds the guard of {limit}")
