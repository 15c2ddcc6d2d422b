"""
Configuration for the EI preprojective toolkit.

Every setting can be overridden from the environment or a ``.env`` file using
the alias given next to it; ``EIPRE_DEFAULT_FIELD`` takes a JSON object.
"""

from pathlib import Path
from typing import Any, Dict

from pydantic import Field, field_validator
from pydantic_settings import BaseSettings


class EngineSettings(BaseSettings):
    """Graded engine and linear algebra."""

    max_path_length: int = Field(default=64, ge=1, alias="EIPRE_MAX_PATH_LENGTH")
    default_maxdeg: int = Field(default=8, ge=0, alias="EIPRE_DEFAULT_MAXDEG")
    use_numpy: bool = Field(default=True, alias="EIPRE_USE_NUMPY")
    # Exhaustive axiom checks up to this dimension, sampled above it.
    associativity_check_limit: int = Field(default=200, ge=1, alias="EIPRE_ASSOC_CHECK_LIMIT")

    class Config:
        env_file = ".env"
        extra = "ignore"


class VerificationSettings(BaseSettings):
    """Randomized checks."""

    seed: int = Field(default=0, alias="EIPRE_SEED")
    iso_retries: int = Field(default=8, ge=1, alias="EIPRE_ISO_RETRIES")
    random_modules: int = Field(default=20, ge=0, alias="EIPRE_RANDOM_MODULES")
    max_tensor_power: int = Field(default=6, ge=1, alias="EIPRE_MAX_TENSOR_POWER")
    orbit_redraws: int = Field(default=10, ge=0, alias="EIPRE_ORBIT_REDRAWS")

    class Config:
        env_file = ".env"
        extra = "ignore"


class FieldSettings(BaseSettings):
    """Coefficient field used when neither the job nor --field names one."""

    default_field: Dict[str, Any] = Field(default={"kind": "prime", "p": 2}, alias="EIPRE_DEFAULT_FIELD")

    @field_validator("default_field")
    @classmethod
    def check_kind(cls, value: Dict[str, Any]) -> Dict[str, Any]:
        if "kind" not in value:
            raise ValueError("field spec needs a 'kind'")
        return value

    class Config:
        env_file = ".env"
        extra = "ignore"


class ReportSettings(BaseSettings):
    report_version: int = Field(default=1, alias="EIPRE_REPORT_VERSION")
    indent: int = Field(default=2, ge=0, alias="EIPRE_REPORT_INDENT")

    class Config:
        env_file = ".env"
        extra = "ignore"


class Settings(BaseSettings):
    """Top-level settings: logging plus one block per concern."""

    debug: bool = Field(default=False, alias="DEBUG")
    log_level: str = Field(default="INFO", alias="LOG_LEVEL")
    log_to_file: bool = Field(default=False, alias="LOG_TO_FILE")

    engine: EngineSettings = Field(default_factory=EngineSettings)
    verification: VerificationSettings = Field(default_factory=VerificationSettings)
    scalars: FieldSettings = Field(default_factory=FieldSettings)
    report: ReportSettings = Field(default_factory=ReportSettings)

    @field_validator("log_level")
    @classmethod
    def check_log_level(cls, value: str) -> str:
        level = value.upper()
        if level not in {"TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"}:
            raise ValueError(f"unknown log level {value!r}")
        return level

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"
        extra = "ignore"

    @property
    def project_root(self) -> Path:
        return Path(__file__).parent.parent

    @property
    def inputs_dir(self) -> Path:
        """Sample job payloads."""
        return self.project_root / "data" / "inputs"

    @property
    def logs_dir(self) -> Path:
        return self.project_root / "logs"


settings = Settings()
