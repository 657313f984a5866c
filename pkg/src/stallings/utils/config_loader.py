import os
from pathlib import Path
from typing import Literal, Optional

import yaml
from pydantic import BaseModel, Field, field_validator

from .logging_config import StructuredLogger

logger = StructuredLogger(__name__)

_ENV_OVERRIDES = {
    "STALLINGS_MONOID_CAP": "monoid_cap",
    "STALLINGS_JOBS": "jobs",
    "STALLINGS_MAX_EXPONENT": "max_exponent",
    "STALLINGS_LOG_LEVEL": "log_level",
}


class StallingsConfig(BaseModel):
    version: int = Field(1, ge=1, le=1)
    monoid_cap: int = Field(1_000_000, ge=1)
    identity_warn_variables: int = Field(3, ge=0)
    max_exponent: int = Field(100_000, ge=1)
    jobs: int = Field(1, ge=1)
    log_level: str = "WARNING"
    report_format: Literal["text", "json"] = "text"

    @field_validator("log_level")
    def validate_log_level(cls, v):
        level = str(v).strip().upper()
        if level not in {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"Unknown log level '{v}'")
        return level


# --- Config Loader (Atomic Reload) ---

class ConfigLoader:
    def __init__(self):
        self.config: Optional[StallingsConfig] = None

    @property
    def config_file(self) -> Optional[Path]:
        raw = (os.getenv("STALLINGS_CONFIG") or "").strip()
        return Path(raw).expanduser() if raw else None

    def load_config(self) -> StallingsConfig:
        """
        Loads defaults, the optional YAML file named by STALLINGS_CONFIG, then
        environment overrides.
        ATOMIC: On failure, previous config is preserved.
        """
        raw_data: dict = {}
        path = self.config_file
        try:
            if path is not None:
                if not path.exists():
                    raise FileNotFoundError(f"Config file not found at {path}")
                with open(path, "r", encoding="utf-8") as f:
                    loaded = yaml.safe_load(f) or {}
                if not isinstance(loaded, dict):
                    raise ValueError("Config document must be a mapping")
                raw_data.update(loaded)
                logger.info("Loading configuration", path=str(path))

            for env_name, field in _ENV_OVERRIDES.items():
                value = (os.getenv(env_name) or "").strip()
                if value:
                    raw_data[field] = value

            # Validate into a temporary; self.config changes only on success
            new_config = StallingsConfig(**raw_data)
        except Exception as e:
            logger.error("Configuration validation failed", error=str(e))
            if self.config is not None:
                logger.warning("Keeping previous valid configuration")
                raise ValueError(f"Invalid configuration (previous config retained): {e}")
            raise ValueError(f"Invalid configuration (no fallback): {e}")

        self.config = new_config
        logger.debug("Configuration loaded", monoid_cap=new_config.monoid_cap, jobs=new_config.jobs)
        return self.config

    def get(self) -> StallingsConfig:
        if not self.config:
            self.load_config()
        return self.config

    def monoid_cap(self) -> int:
        return self.get().monoid_cap


config_loader = ConfigLoader()
