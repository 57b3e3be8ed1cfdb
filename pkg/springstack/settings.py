"""
settings.py — Global configuration for enumeration ceilings and field bounds.

Usage::

    import springstack

    springstack.init(max_flags=1_000_000)

    # or through the environment, read at import time
    #   SPRINGSTACK_MAX_FLAGS=1000000 springstack enumerate-fibre ...
"""

from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, replace

from springstack.errors import ConfigError

ENV_MAX_FLAGS = "SPRINGSTACK_MAX_FLAGS"
ENV_MAX_TABLEAU_N = "SPRINGSTACK_MAX_TABLEAU_N"
ENV_MAX_PRIME = "SPRINGSTACK_MAX_PRIME"


@dataclass(frozen=True)
class Settings:
    """Process-wide limits. All fields are positive integers."""

    max_flags: int = 10_000_000     # fibre enumeration ceiling
    max_tableau_n: int = 14         # largest N for enumerate_standard
    max_prime: int = 65_521         # largest admissible characteristic (< 2**16)

    def __post_init__(self) -> None:
        for name in ("max_flags", "max_tableau_n", "max_prime"):
            value = getattr(self, name)
            if not isinstance(value, int) or value < 1:
                raise ConfigError(f"{name} must be a positive integer, got {value!r}")
        if self.max_prime < 2:
            raise ConfigError("max_prime must be at least 2")

    @classmethod
    def from_env(cls, environ: Mapping[str, str] | None = None) -> Settings:
        env = os.environ if environ is None else environ
        defaults = cls()
        return cls(
            max_flags=_env_int(env, ENV_MAX_FLAGS, defaults.max_flags),
            max_tableau_n=_env_int(env, ENV_MAX_TABLEAU_N, defaults.max_tableau_n),
            max_prime=_env_int(env, ENV_MAX_PRIME, defaults.max_prime),
        )


def _env_int(env: Mapping[str, str], key: str, default: int) -> int:
    raw = env.get(key)
    if raw is None or raw == "":
        return default
    try:
        return int(str(raw).replace("_", ""))
    except ValueError:
        raise ConfigError(f"{key} must be an integer, got {raw!r}") from None


# ── Global settings ────────────────────────────────────────────────────────────

_global_settings: Settings = Settings.from_env()


def get_settings() -> Settings:
    return _global_settings


def set_settings(settings: Settings) -> None:
    global _global_settings
    _global_settings = settings


def init(
    max_flags: int | None = None,
    max_tableau_n: int | None = None,
    max_prime: int | None = None,
    from_env: bool = False,
) -> Settings:
    """Configure springstack global state and return the new settings.

    Args:
        max_flags: Ceiling on the number of flags a fibre enumeration may visit.
        max_tableau_n: Largest N for which standard tableaux are enumerated.
        max_prime: Largest field characteristic accepted.
        from_env: Start from the environment instead of the current settings.
    """
    base = Settings.from_env() if from_env else get_settings()
    overrides = {
        k: v
        for k, v in (
            ("max_flags", max_flags),
            ("max_tableau_n", max_tableau_n),
            ("max_prime", max_prime),
        )
        if v is not None
    }
    settings = replace(base, **overrides)
    set_settings(settings)
    return settings
