"""Pydantic settings models for dynisched configuration."""

from typing import Literal

from pydantic import AliasChoices, Field, field_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from dynisched.bench.workload import WorkloadModel, parse_mix


class EngineSettings(BaseSettings):
    """Engine selection and debug switches."""

    model_config = SettingsConfigDict(env_prefix="DYNISCHED_ENGINE_", env_file=".env", extra="ignore")

    name: str = Field(
        default="naive",
        description="Engine: naive, sqrt, cuberoot, two, multi, deleteonly or insertonly",
    )
    machines: int = Field(
        default=1,
        ge=1,
        le=6,
        description="Number of machines",
    )
    debug_assert: bool = Field(
        default=False,
        validation_alias=AliasChoices("DYNISCHED_ENGINE_DEBUG_ASSERT", "DYNISCHED_DEBUG_ASSERT", "debug_assert"),
        description="Recompute every query answer with the oracle and fail on a mismatch",
    )
    eager_tables: bool = Field(
        default=True,
        description="Fill multi-machine compressible tables on every part rebuild; off leaves them filled lazily by queries",
    )


class WorkloadSettings(BaseSettings):
    """Defaults for generated traces."""

    model_config = SettingsConfigDict(env_prefix="DYNISCHED_WORKLOAD_", env_file=".env", extra="ignore")

    model: WorkloadModel = Field(
        default=WorkloadModel.UNIFORM,
        description="Workload model: uniform, nested, sliding or partchurn",
    )
    ops: int = Field(
        default=1000,
        ge=0,
        description="Number of operations per trace",
    )
    mix: str = Field(
        default="0.5:0.3:0.2",
        description="Insert:delete:query shares summing to 1",
    )
    coord_range: int = Field(
        default=10_000,
        ge=2,
        description="Start coordinates are drawn from [0, coord_range)",
    )
    max_length: int = Field(
        default=100,
        ge=1,
        description="Longest generated interval",
    )
    seed: int = Field(
        default=0,
        description="Generator seed",
    )

    @field_validator("mix")
    @classmethod
    def check_mix(cls, value: str) -> str:
        parse_mix(value)
        return value


class BenchSettings(BaseSettings):
    """Benchmark defaults."""

    model_config = SettingsConfigDict(env_prefix="DYNISCHED_BENCH_", env_file=".env", extra="ignore")

    engines: list[str] = Field(
        default_factory=lambda: ["naive", "sqrt", "cuberoot"],
        description="Engines benchmarked when --engine is not given",
    )
    output_path: str = Field(
        default="bench.csv",
        description="Default CSV output path",
    )
    jobs: int = Field(
        default=1,
        ge=1,
        description="Worker processes running (engine, trace) pairs",
    )


class ReductionSettings(BaseSettings):
    """Random graph parameters for the reduction verifier."""

    model_config = SettingsConfigDict(env_prefix="DYNISCHED_REDUCTION_", env_file=".env", extra="ignore")

    ell: int = Field(
        default=1,
        ge=1,
        le=4,
        description="Cycle length is 2 * ell + 1",
    )
    nodes: int = Field(
        default=3,
        ge=1,
        description="Nodes per layer",
    )
    max_weight: int = Field(
        default=10,
        ge=1,
        description="Edge weights are drawn from [1, max_weight]",
    )
    density: float = Field(
        default=1.0,
        gt=0.0,
        le=1.0,
        description="Probability that each possible edge is present",
    )
    seed: int = Field(
        default=0,
        description="Graph seed",
    )


class LoggingSettings(BaseSettings):
    """Log output settings."""

    model_config = SettingsConfigDict(env_prefix="DYNISCHED_LOGGING_", env_file=".env", extra="ignore")

    level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Log level; --verbose forces DEBUG",
    )


class Settings(BaseSettings):
    """Root settings aggregating all configuration sections."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_nested_delimiter="__",
        extra="ignore",
    )

    engine: EngineSettings = Field(default_factory=EngineSettings)
    workload: WorkloadSettings = Field(default_factory=WorkloadSettings)
    bench: BenchSettings = Field(default_factory=BenchSettings)
    reduction: ReductionSettings = Field(default_factory=ReductionSettings)
    logging: LoggingSettings = Field(default_factory=LoggingSettings)

    @property
    def debug_assert(self) -> bool:
        """Convenience accessor for the oracle shadow-check switch."""
        return self.engine.debug_assert
