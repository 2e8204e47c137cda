from functools import lru_cache
from typing import Literal

from pydantic import Field, ValidationError, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from kfrechet.core.exceptions import summarize_validation_error


class SettingsError(RuntimeError):
    """Configuration is missing or malformed."""


class Settings(BaseSettings):
    """Every environment-derived value, resolved once by `get_settings`.

    No `env_file`: the CLI is driven by flags, and the only knob a user reaches for
    in the environment is the tolerance (`KFRECHET_TOL`).
    """

    model_config = SettingsConfigDict(
        env_prefix="KFRECHET_",
        case_sensitive=False,
        extra="ignore",
    )

    # Absolute tolerance for interval endpoints, coverage gaps and discriminants.
    tol: float = Field(1e-9, ge=0.0, allow_inf_nan=False)

    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "WARNING"

    # Bisection width used when a caller of the epsilon search passes none.
    search_tol: float = Field(1e-6, gt=0.0, allow_inf_nan=False)

    # Oracles
    pixel_resolution: int = Field(512, ge=16)
    hausdorff_samples: int = Field(10_000, ge=100)
    oracle_max_intervals: int = Field(20, ge=1)

    # Box reduction
    sat_max_variables: int = Field(20, ge=1)

    # SVG
    svg_cell_samples: int = Field(24, ge=2)

    @field_validator("log_level", mode="before")
    @classmethod
    def _normalize_log_level(cls, value: object) -> object:
        return value.strip().upper() if isinstance(value, str) else value


@lru_cache
def get_settings() -> Settings:
    """Resolve settings once per process. Raises on anything missing or malformed."""
    try:
        return Settings()
    except ValidationError as e:
        raise SettingsError(f"Invalid configuration: {summarize_validation_error(e)}") from None
