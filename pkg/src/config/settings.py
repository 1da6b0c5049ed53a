from typing import Literal, Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from pydantic import Field, field_validator, model_validator


class Settings(BaseSettings):
    model_config = SettingsConfigDict(
        env_prefix="DIVTORUS_",
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore",
    )

    # Desk-scale bounds
    max_rank: int = Field(default=4, ge=1, le=6, description="Largest N accepted for sl_{N+1}")
    max_label_sum: int = Field(default=4, ge=0, le=8, description="Largest C_1+...+C_N accepted")
    max_irrep_dim: int = Field(default=256, ge=1, le=4096, description="Largest dim V(lambda) built")

    # Generation
    generator_radius: int = Field(default=2, ge=0, le=4, description="Generator radius R, |r|_inf <= R")
    box_outer: int = Field(default=4, ge=0, le=8)
    box_inner: int = Field(default=2, ge=0, le=8)
    seed: int = Field(default=20240601, ge=0, le=2**64 - 1, description="PRNG seed for sampled vectors")
    coefficient_bound: int = Field(default=3, ge=1, le=50, description="Sampled coefficients lie in [-b, b]")
    seed_attempts: int = Field(default=64, ge=1, le=10000, description="Draws before giving up on a seed outside W~")
    operator_cache_size: int = Field(default=4096, ge=1, le=1_000_000, description="Field matrices kept per module")

    # Verification suites
    jacobi_samples: int = Field(default=200, ge=1, le=100000)
    module_axiom_samples: int = Field(default=100, ge=1, le=100000)
    equivariance_samples: int = Field(default=20, ge=1, le=10000)

    # Logging
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = Field(
        default="WARNING"
    )
    log_format: Literal["json", "console"] = Field(default="console")

    # Monitoring
    enable_metrics: bool = Field(default=True)
    metrics_file: Optional[str] = Field(
        default=None, description="Write prometheus text exposition here after each command"
    )

    @field_validator("metrics_file")
    @classmethod
    def validate_metrics_file(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        v = v.strip()
        return v or None

    @model_validator(mode="after")
    def validate_box(self) -> "Settings":
        if self.box_inner > self.box_outer:
            raise ValueError(
                f"box_inner ({self.box_inner}) must not exceed box_outer ({self.box_outer})"
            )
        return self

    @property
    def seed_from_environment(self) -> bool:
        return "seed" in self.model_fields_set


settings = Settings()
