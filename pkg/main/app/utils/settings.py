"""
Runtime settings for gamma-expansions
Priority: command-line flag > environment variable > built-in default
"""

import os
from dataclasses import dataclass, replace
from typing import Callable, Optional, TypeVar

from ..core.coeff_families import EXACT_PAIR_LIMIT
from ..core.errors import ConfigurationError
from ..core.precision_eval import DEFAULT_WORKING_PRECISION, GUARD_DIGITS, PrecisionContext

ENV_PREFIX = "GAMMAEXP_"

T = TypeVar("T")


def _env(name: str, parse: Callable[[str], T], default: T) -> T:
    raw = os.getenv(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    try:
        return parse(raw.strip())
    except ValueError as e:
        raise ConfigurationError(f"{ENV_PREFIX}{name}={raw!r}: {e}") from e


def _parse_bool(raw: str) -> bool:
    lowered = raw.lower()
    if lowered in ("1", "true", "yes", "on"):
        return True
    if lowered in ("0", "false", "no", "off"):
        return False
    raise ValueError("expected true/false")


@dataclass(frozen=True)
class Settings:
    precision: int = DEFAULT_WORKING_PRECISION
    target_digits: Optional[int] = None
    max_order: int = 64
    exact_pair_limit: int = EXACT_PAIR_LIMIT
    float_pairs: bool = False
    workers: int = 4
    log_level: str = "WARNING"

    def __post_init__(self):
        if self.workers < 1:
            raise ConfigurationError(f"workers must be >= 1, got {self.workers}")
        if self.max_order < 0:
            raise ConfigurationError(f"max_order must be >= 0, got {self.max_order}")
        if not 0 <= self.exact_pair_limit <= EXACT_PAIR_LIMIT:
            raise ConfigurationError(
                f"exact_pair_limit must lie in 0..{EXACT_PAIR_LIMIT}, got {self.exact_pair_limit}")
        if self.effective_target_digits + GUARD_DIGITS > self.precision:
            raise ConfigurationError(
                f"precision {self.precision} must exceed target digits "
                f"{self.effective_target_digits} by at least {GUARD_DIGITS}")

    @property
    def effective_target_digits(self) -> int:
        if self.target_digits is None:
            return self.precision - GUARD_DIGITS
        return self.target_digits

    @classmethod
    def from_env(cls) -> "Settings":
        """Read GAMMAEXP_* variables, falling back to defaults"""
        defaults = cls()
        return cls(
            precision=_env("PRECISION", int, defaults.precision),
            target_digits=_env("TARGET_DIGITS", int, defaults.target_digits),
            max_order=_env("MAX_ORDER", int, defaults.max_order),
            exact_pair_limit=_env("EXACT_PAIR_LIMIT", int, defaults.exact_pair_limit),
            float_pairs=_env("FLOAT_PAIRS", _parse_bool, defaults.float_pairs),
            workers=_env("WORKERS", int, defaults.workers),
            log_level=_env("LOG_LEVEL", str.upper, defaults.log_level),
        )

    def override(self, **flags) -> "Settings":
        """Copy with every flag that was actually given (not None) applied"""
        given = {k: v for k, v in flags.items() if v is not None}
        return replace(self, **given)

    def precision_context(self) -> PrecisionContext:
        return PrecisionContext(self.precision, self.effective_target_digits)


_settings: Optional[Settings] = None


def get_settings() -> Settings:
    """Process-wide settings, read from the environment on first use"""
    global _settings
    if _settings is None:
        _settings = Settings.from_env()
    return _settings


def reset_settings():
    """Forget the cached settings (tests change the environment)"""
    global _settings
    _settings = None
