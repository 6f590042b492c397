from __future__ import annotations

import logging
import os
from dataclasses import dataclass, fields, replace

log = logging.getLogger(__name__)


def _default_db_url() -> str:
    # SQLite file in ./data/runs.db
    return "sqlite:///data/runs.db"


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or not raw.strip():
        return default
    try:
        return int(raw.strip())
    except ValueError:
        log.warning("ignoring %s=%r: not an integer", name, raw)
        return default


@dataclass(frozen=True)
class Settings:
    max_players: int = 6
    max_profile_players: int = 4
    max_one_sided_players: int = 4
    max_monadic_players: int = 5
    max_profiles: int = 1 << 24
    max_coalition_work: int = 5_000_000
    precision: int = 10**12
    jobs: int = 1
    seed: int = 0
    log_level: str = "WARNING"
    database_url: str = _default_db_url()


DEFAULTS = Settings()

_current: Settings | None = None


def load_settings() -> Settings:
    """Build settings from the environment (call after load_dotenv)."""
    return Settings(
        max_players=_env_int("NETCONSENT_MAX_PLAYERS", DEFAULTS.max_players),
        max_profile_players=_env_int("NETCONSENT_MAX_PROFILE_PLAYERS", DEFAULTS.max_profile_players),
        max_one_sided_players=_env_int("NETCONSENT_MAX_ONE_SIDED_PLAYERS", DEFAULTS.max_one_sided_players),
        max_monadic_players=_env_int("NETCONSENT_MAX_MONADIC_PLAYERS", DEFAULTS.max_monadic_players),
        max_profiles=_env_int("NETCONSENT_MAX_PROFILES", DEFAULTS.max_profiles),
        max_coalition_work=_env_int("NETCONSENT_MAX_COALITION_WORK", DEFAULTS.max_coalition_work),
        precision=_env_int("NETCONSENT_PRECISION", DEFAULTS.precision),
        jobs=_env_int("NETCONSENT_JOBS", DEFAULTS.jobs),
        seed=_env_int("NETCONSENT_SEED", DEFAULTS.seed),
        log_level=os.getenv("LOG_LEVEL", DEFAULTS.log_level).upper(),
        database_url=os.getenv("DATABASE_URL", DEFAULTS.database_url),
    )


def settings() -> Settings:
    global _current
    if _current is None:
        _current = load_settings()
    return _current


def configure(**overrides: object) -> Settings:
    """Replace selected settings; ``None`` values are ignored."""
    global _current
    known = {f.name for f in fields(Settings)}
    unknown = set(overrides) - known
    if unknown:
        raise TypeError(f"unknown settings: {', '.join(sorted(unknown))}")

    changes = {k: v for k, v in overrides.items() if v is not None}
    _current = replace(settings(), **changes)

    for name in ("max_players", "max_profile_players", "max_one_sided_players", "max_monadic_players"):
        value = getattr(_current, name)
        if value > getattr(DEFAULTS, name):
            log.warning("%s raised to %d (default %d): enumeration may exhaust memory", name, value, getattr(DEFAULTS, name))
    return _current


def reset() -> None:
    global _current
    _current = None
