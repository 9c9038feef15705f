"""Application settings module.

Centralized environment-driven configuration using Pydantic BaseSettings (v2).
Fields kept minimal; CLI flags override them per invocation.
"""
from __future__ import annotations
from fractions import Fraction
from functools import lru_cache
from typing import Literal
from pydantic import Field
from pydantic_settings import BaseSettings
from pydantic import field_validator

EnvironmentName = Literal["dev", "prod", "test"]


class Settings(BaseSettings):
    APP_ENV: EnvironmentName = Field("dev", description="Runtime environment")
    LOG_LEVEL: str = Field(
        "INFO",
        description="Application log level (DEBUG, INFO, WARNING, ERROR). Logs go to stderr.",
    )
    MAX_DEGREE: int = Field(
        8,
        description="Largest degree accepted by nonassociative subalgebra membership before ResourceLimit.",
    )
    DEFAULT_VARIABLES: str = Field("x,y,z", description="Comma separated generators of K<X> used by the CLI")
    DEFAULT_Z_VARIABLES: str = Field("z1,z2", description="Comma separated variables of K[Z] for ge2 commands")
    JSON_OUTPUT: bool = Field(False, description="Emit JSON reports by default (same as --json)")
    TRANSLATION_OFFSETS: str = Field(
        "1,0;0,1;1,1",
        description="Constant translations (x+a, y+b, z) tried by the z-fixing wildness decision, as 'a,b;a,b'.",
    )

    @field_validator("MAX_DEGREE")
    def _validate_max_degree(cls, v: int) -> int:  # noqa: D401 - simple validator
        if v <= 0:
            raise ValueError("MAX_DEGREE must be positive")
        return v

    @field_validator("TRANSLATION_OFFSETS")
    def _validate_offsets(cls, v: str) -> str:
        _parse_offsets(v)
        return v

    @property
    def debug(self) -> bool:
        return self.APP_ENV == "dev"

    @property
    def variables(self) -> tuple[str, ...]:
        return _split_names(self.DEFAULT_VARIABLES)

    @property
    def z_variables(self) -> tuple[str, ...]:
        return _split_names(self.DEFAULT_Z_VARIABLES)

    @property
    def translation_offsets(self) -> list[tuple[Fraction, Fraction]]:
        return _parse_offsets(self.TRANSLATION_OFFSETS)

    @property
    def log_level_numeric(self) -> int:
        mapping = {
            "CRITICAL": 50,
            "ERROR": 40,
            "WARNING": 30,
            "INFO": 20,
            "DEBUG": 10,
        }
        return mapping.get(self.LOG_LEVEL.upper(), 20)

    model_config = {
        "env_file": ".env",
        "env_file_encoding": "utf-8",
        "extra": "ignore",
        "case_sensitive": False,
    }


def _split_names(raw: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in raw.split(",") if part.strip())


def _parse_offsets(raw: str) -> list[tuple[Fraction, Fraction]]:
    offsets: list[tuple[Fraction, Fraction]] = []
    for chunk in raw.split(";"):
        if not chunk.strip():
            continue
        parts = [p.strip() for p in chunk.split(",")]
        if len(parts) != 2:
            raise ValueError(f"translation offset must be 'a,b', got {chunk!r}")
        offsets.append((Fraction(parts[0]), Fraction(parts[1])))
    return offsets


_OVERRIDES: dict[str, object] = {}


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return cached settings instance (singleton style)."""
    return Settings(**_OVERRIDES)


def override_settings(**fields: object) -> Settings:
    """Replace the per-run overrides (CLI flags); None values fall back to env/.env."""
    _OVERRIDES.clear()
    _OVERRIDES.update({k: v for k, v in fields.items() if v is not None})
    reset_settings_cache()
    return get_settings()


def reset_settings_cache() -> None:  # testing helper
    try:
        get_settings.cache_clear()  # type: ignore[attr-defined]
    except Exception:
        pass


__all__ = ["Settings", "get_settings", "override_settings", "reset_settings_cache"]
