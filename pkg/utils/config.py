"""
Configuration management for the Z4 two-chain poset code toolkit.
"""
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings and configuration."""

    # Logging Configuration
    LOG_LEVEL: str = "INFO"
    LOG_FORMAT: str = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    LOG_DATE_FORMAT: str = "%Y-%m-%d %H:%M:%S"
    LOG_FILE: Optional[str] = None

    # Dimension caps
    CLOSED_FORM_MAX_N: int = 30
    MATERIALIZE_MAX_N: int = 12
    BRUTE_FORCE_MAX_N: int = 10
    AUTO_BRUTE_FORCE_MAX_N: int = 6
    FAST_PATH_MAX_N: int = 20
    CLOSURE_CHECK_MAX_N: int = 4

    # Enumeration Configuration
    ENUMERATION_CHUNK_SIZE: int = 1 << 22  # symbols per block
    CONCURRENT_TASKS: int = 1

    # Analyzer-specific Configuration
    CLOSED_FORM_ANALYZER_CONFIG: dict = {
        "cap": "CLOSED_FORM_MAX_N",
    }

    FAST_PATH_ANALYZER_CONFIG: dict = {
        "cap": "FAST_PATH_MAX_N",
    }

    BRUTE_FORCE_ANALYZER_CONFIG: dict = {
        "cap": "BRUTE_FORCE_MAX_N",
        "auto_cap": "AUTO_BRUTE_FORCE_MAX_N",
    }

    GRAY_ANALYZER_CONFIG: dict = {
        "cap": "MATERIALIZE_MAX_N",
        "closure_cap": "CLOSURE_CHECK_MAX_N",
    }

    # Model Configuration
    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=True,
        extra="allow"
    )

    def get_analyzer_config(self, analyzer_name: str) -> dict:
        """
        Get configuration for a specific analyzer.

        Args:
            analyzer_name (str): Name of the analyzer

        Returns:
            dict: Analyzer configuration
        """
        config_map = {
            "closed_form": self.CLOSED_FORM_ANALYZER_CONFIG,
            "fast_path": self.FAST_PATH_ANALYZER_CONFIG,
            "brute_force": self.BRUTE_FORCE_ANALYZER_CONFIG,
            "gray": self.GRAY_ANALYZER_CONFIG,
        }
        return config_map.get(analyzer_name, {})

    def get_cap(self, name: str) -> int:
        """
        Resolve a dimension cap by its setting name.

        Args:
            name (str): Setting name, e.g. "BRUTE_FORCE_MAX_N"

        Returns:
            int: The configured cap
        """
        return int(getattr(self, name))


# creating settings instance
settings = Settings()
