from functools import lru_cache
from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings with environment variable support."""

    model_config = SettingsConfigDict(
        env_prefix="HILBERT_CR_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Logging
    log_level: str = Field("WARNING", description="Log level for the structlog pipeline")
    log_json: bool = Field(True, description="Render log events as JSON lines")

    # Enumeration guards
    delta_h_max_elements: int = Field(20, ge=1, description="Largest basis size for which delta_H is computed")
    delta_modulus_max_minors: int = Field(200_000, ge=1, description="Largest number of maximal minors enumerated")
    d_membership_max_subsets: int = Field(20_000, ge=1, description="Largest number of strips tested for D-membership")
    lattice_points_max: int = Field(2_000_000, ge=1, description="Node budget of one lattice point enumeration")
    sigma_enumeration_max: int = Field(500_000, ge=1, description="Node budget of one bounded representation search")
    sigma_default_cap: Optional[int] = Field(None, ge=1, description="Subset size cap of the sigma oracle (None: 2n-2)")

    # Descent behaviour
    descent_close_stuck: bool = Field(True, description="Close a stuck face descent with the sigma oracle")

    # Sweeps
    threads: int = Field(1, ge=1, description="Worker threads for box sweeps")


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()


# Global settings instance
settings = get_settings()
