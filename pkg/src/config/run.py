from typing import List, Literal, Optional, Tuple
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator
from src.utils.errors import ConfigError
from src.utils.linalg import Scalar
from src.utils.rationals import format_rational, parse_int_list, parse_rational_list
from .settings import settings

Command = Literal["verify-algebra", "irreducibility", "derham", "kappa", "theta-strings", "dump-irrep"]


class RunConfig(BaseModel):
    """One CLI invocation, embedded verbatim in every report."""

    model_config = ConfigDict(populate_by_name=True, frozen=True, extra="forbid")

    command: Command
    N: int = Field(default=2, ge=1, description="Rank; the algebra is sl_{N+1}")
    lam: Optional[str] = Field(default=None, alias="lambda", description='Label such as "1,0"')
    sigma: Optional[List[str]] = Field(default=None, description='Rationals as "p/q" strings')
    R: int = Field(default_factory=lambda: settings.generator_radius, ge=0, le=4)
    box_out: int = Field(default_factory=lambda: settings.box_outer, ge=0, le=8)
    box_in: int = Field(default_factory=lambda: settings.box_inner, ge=0, le=8)
    seed: int = Field(default_factory=lambda: settings.seed, ge=0, le=2**64 - 1)
    out: Optional[str] = None
    certificates: Optional[str] = Field(default=None, description="Write the certificate replay file here")
    format: Literal["json", "text"] = "text"
    seed_in: Literal["random", "W", "outside"] = "random"
    seed_at: Literal["0", "-sigma"] = "0"
    k: Optional[int] = Field(default=None, ge=0)
    log_level: Optional[Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"]] = None

    @field_validator("lam")
    @classmethod
    def validate_lambda(cls, v: Optional[str]) -> Optional[str]:
        if v is None:
            return v
        values = parse_int_list(v)
        if any(c < 0 for c in values):
            raise ValueError(f"highest weight label must be nonnegative: {v!r}")
        return ",".join(str(c) for c in values)

    @field_validator("sigma", mode="before")
    @classmethod
    def validate_sigma(cls, v: object) -> Optional[List[str]]:
        if v is None:
            return None
        text = v if isinstance(v, str) else ",".join(str(x) for x in v)  # type: ignore[attr-defined]
        return [format_rational(x) for x in parse_rational_list(text)]

    @model_validator(mode="after")
    def validate_shape(self) -> "RunConfig":
        if self.N > settings.max_rank:
            raise ValueError(f"N={self.N} exceeds max_rank={settings.max_rank}")
        if self.box_in > self.box_out:
            raise ValueError(f"--box-in ({self.box_in}) must not exceed --box-out ({self.box_out})")
        if self.lam is not None and len(self.lam.split(",")) != self.N:
            raise ValueError(f"--lambda {self.lam!r} needs N={self.N} entries")
        if self.sigma is not None and len(self.sigma) != self.N + 1:
            raise ValueError(f"--sigma needs N+1={self.N + 1} entries, got {len(self.sigma)}")
        if self.k is not None and self.k > self.N:
            raise ValueError(f"--k must lie in 0..N, got {self.k}")
        return self

    @property
    def label(self) -> Tuple[int, ...]:
        if self.lam is None:
            raise ConfigError(f"{self.command} needs --lambda")
        return parse_int_list(self.lam)

    @property
    def sigma_values(self) -> Tuple[Scalar, ...]:
        """sigma as exact rationals; zero when not given."""
        if self.sigma is None:
            return parse_rational_list(",".join(["0"] * (self.N + 1)))
        return parse_rational_list(",".join(self.sigma))
