"""
Main Settings Configuration
Central configuration using Pydantic Settings
"""

from functools import lru_cache
from pathlib import Path
from typing import Any, Dict, Optional

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Application settings
    Values are loaded from SPEHKIT_* environment variables or a .env file
    """

    model_config = SettingsConfigDict(
        env_prefix="SPEHKIT_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Application
    app_name: str = "speh-kit"
    debug: bool = False
    log_level: str = "WARNING"
    log_json: bool = False

    # Alphabet
    alphabet_path: Optional[Path] = None

    # Universe defaults for enumerate / selfcheck
    max_degree: int = Field(default=12, ge=0)
    max_k: int = Field(default=4, ge=1)
    alpha_grid: str = "1/4,1/3"
    detail_max_degree: int = Field(default=8, ge=0)

    # Reports
    max_failures_reported: int = Field(default=5, ge=1)
    json_indent: int = Field(default=2, ge=0)

    @field_validator("log_level")
    @classmethod
    def _upper_level(cls, value: str) -> str:
        return value.upper()

    @property
    def effective_log_level(self) -> str:
        """debug forces DEBUG whatever log_level says"""
        return "DEBUG" if self.debug else self.log_level

    def universe_defaults(self) -> Dict[str, Any]:
        """Default bounds for the enumerator"""
        return {
            'max_degree': self.max_degree,
            'max_k': self.max_k,
            'alpha_grid': self.alpha_grid,
        }


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance"""
    return Settings()
