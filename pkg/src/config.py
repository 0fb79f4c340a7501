"""
Engine configuration loaded from the environment (.env supported)
"""
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from dotenv import load_dotenv

from src.errors import ConfigError

# Load environment variables
load_dotenv()


@dataclass(frozen=True)
class EngineSettings:
    """Tunables for canonicalization, the deletion-contraction engine and the oracle"""
    canonical_bound: int = 10  # graphs up to this order get isomorphism-invariant keys
    density_threshold: Fraction = Fraction(1, 2)  # |E| above this share of C(n,2) -> addition recurrence
    cache_limit: int = 1 << 20  # memo entries; inserts stop once reached
    oracle_budget: int = 10 ** 8  # candidate assignments the oracle may enumerate

    def __post_init__(self):
        if self.canonical_bound < 0:
            raise ConfigError(f"canonical_bound must be >= 0, got {self.canonical_bound}")
        if not 0 <= self.density_threshold <= 1:
            raise ConfigError(f"density_threshold must lie in [0, 1], got {self.density_threshold}")
        if self.cache_limit < 0:
            raise ConfigError(f"cache_limit must be >= 0, got {self.cache_limit}")
        if self.oracle_budget < 1:
            raise ConfigError(f"oracle_budget must be >= 1, got {self.oracle_budget}")

    @classmethod
    def from_env(cls) -> 'EngineSettings':
        """Build settings from CHROMATIC_* / ORACLE_* environment variables"""
        return cls(
            canonical_bound=_env_int("CHROMATIC_CANONICAL_BOUND", cls.canonical_bound),
            density_threshold=_env_fraction("CHROMATIC_DENSITY_THRESHOLD", cls.density_threshold),
            cache_limit=_env_int("CHROMATIC_CACHE_LIMIT", cls.cache_limit),
            oracle_budget=_env_int("ORACLE_BUDGET", cls.oracle_budget),
        )


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ConfigError(f"{name} must be an integer, got {raw!r}") from None


def _env_fraction(name: str, default: Fraction) -> Fraction:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return Fraction(raw.strip())
    except (ValueError, ZeroDivisionError):
        raise ConfigError(f"{name} must be a number or ratio like 1/2, got {raw!r}") from None


_settings: Optional[EngineSettings] = None


def get_settings() -> EngineSettings:
    """Process-wide settings, read from the environment on first use"""
    global _settings
    if _settings is None:
        _settings = EngineSettings.from_env()
    return _settings
