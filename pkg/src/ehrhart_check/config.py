"""Configuration management for ehrhart-check."""

from pathlib import Path

import yaml
from pydantic import BaseModel, ConfigDict, Field, model_validator


class CapsConfig(BaseModel):
    """Resource caps that keep computations at desk scale."""

    model_config = ConfigDict(frozen=True)

    max_dimension: int = Field(default=8, ge=0, le=8)
    max_box_points: int = 5_000_000
    koszul_nonzeros: int = 2_000_000
    toric_max_degree: int = Field(default=5, ge=2)
    oracle_max_volume: int = 200
    oracle_max_dimension: int = 4
    modular_prepass: bool = True


class CorpusConfig(BaseModel):
    """Random corpus definition. Identical configs give identical corpora."""

    seed: int = Field(default=1, ge=0, lt=2**64)
    count: int = Field(default=100, ge=0)
    dim_min: int = Field(default=2, ge=1, le=8)
    dim_max: int = Field(default=4, ge=1, le=8)
    entry_bound: int = Field(default=4, ge=1)
    simplex_fraction: float = Field(default=0.8, ge=0.0, le=1.0)
    vertex_min: int = Field(default=4, ge=1)
    vertex_max: int = Field(default=8, ge=1)
    degree: int | None = None
    budget_factor: int = Field(default=50, ge=1)
    betti_max_points: int = 12
    toric: bool = True
    inject_catalog: bool = True
    workers: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _check_ranges(self) -> "CorpusConfig":
        if self.dim_min > self.dim_max:
            raise ValueError(f"dim_min {self.dim_min} exceeds dim_max {self.dim_max}")
        if self.vertex_min > self.vertex_max:
            raise ValueError(f"vertex_min {self.vertex_min} exceeds vertex_max {self.vertex_max}")
        return self

    @property
    def budget(self) -> int:
        """Maximum number of candidates drawn before giving up on the filter."""
        return self.count * self.budget_factor


class Config(BaseModel):
    """Toolkit configuration."""

    caps: CapsConfig = CapsConfig()
    corpus: CorpusConfig = CorpusConfig()
    log_level: str = "WARNING"

    @classmethod
    def from_yaml(cls, path: str | Path) -> "Config":
        """Load configuration from YAML file."""
        path = Path(path)
        if not path.exists():
            return cls()

        with open(path) as f:
            data = yaml.safe_load(f)

        return cls(**data) if data else cls()
