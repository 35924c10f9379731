"""
Configurações centrais do simulador de forrageamento.

Hierarchical, strongly typed settings: one BaseSettings per concern, each
with its own environment prefix, composed into the root Settings.
"""

from functools import lru_cache
from typing import Optional

from pydantic import Field, field_validator, model_validator
from pydantic_settings import BaseSettings, SettingsConfigDict

from app.models.battery import AdaptationWeights, EnergyRates
from app.strategies.base import Strategy

DEFAULT_SWARM_SIZES = [2, 4, 8, 16, 32, 64, 128, 256]
DESK_SCALE_MAX_SIZE = 64


class ArenaSettings(BaseSettings):
    """Arena geometry, kinematics and resource rule."""

    model_config = SettingsConfigDict(
        env_prefix="ARENA_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    width: float = Field(default=10.0, gt=0, description="Arena width in meters")
    height: float = Field(default=10.0, gt=0, description="Arena height in meters")
    nest_width: float = Field(default=1.0, gt=0, description="Centered nest width in meters")
    nest_height: float = Field(default=1.0, gt=0, description="Centered nest height in meters")
    robot_speed: float = Field(default=0.1, gt=0, description="Meters per tick")
    sensing_radius: float = Field(default=0.15, gt=0, description="Resource pickup range")
    collision_radius: float = Field(default=0.2, gt=0, description="Robot encounter range")
    turn_noise: float = Field(default=0.3, ge=0, description="Max heading change per tick (rad)")
    initial_resources: int = Field(default=600, ge=0, description="Live resources kept in the arena while respawning")
    target_collected: int = Field(default=100, ge=0, description="Pickups after which respawn stops")
    final_remaining: int = Field(default=25, ge=0, description="Live resources left once respawn stops")
    tick_limit: int = Field(default=200_000, gt=0, description="Safety cap on run length")

    @model_validator(mode="after")
    def _nest_inside(self) -> "ArenaSettings":
        if self.nest_width >= self.width or self.nest_height >= self.height:
            raise ValueError("nest must lie strictly inside the arena")
        return self

    @property
    def nest_center(self) -> tuple[float, float]:
        return (self.width / 2.0, self.height / 2.0)

    @property
    def nest_bounds(self) -> tuple[float, float, float, float]:
        cx, cy = self.nest_center
        return (
            cx - self.nest_width / 2.0,
            cx + self.nest_width / 2.0,
            cy - self.nest_height / 2.0,
            cy + self.nest_height / 2.0,
        )

    def in_nest(self, x: float, y: float) -> bool:
        x_min, x_max, y_min, y_max = self.nest_bounds
        return x_min <= x <= x_max and y_min <= y <= y_max


class EnergySettings(BaseSettings):
    """Constant energy rates and nest timing."""

    model_config = SettingsConfigDict(
        env_prefix="ENERGY_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    alpha_s: float = Field(default=0.008, gt=0, description="Searching drain per tick")
    alpha_r: float = Field(default=0.001, gt=0, description="Retreating drain per tick")
    collection_cost: float = Field(default=0.28, ge=0, description="p, cost of one pickup")
    collection_success_probability: float = Field(default=1.0, ge=0.0, le=1.0, description="Chance a resource contact yields a pickup")
    nest_delay: int = Field(default=20, ge=0, description="Ticks to recharge after arrival")

    @property
    def rates(self) -> EnergyRates:
        return EnergyRates(alpha_s=self.alpha_s, alpha_r=self.alpha_r, p=self.collection_cost)


class AdaptationSettings(BaseSettings):
    """Initial thresholds and adaptation weights."""

    model_config = SettingsConfigDict(
        env_prefix="ADAPT_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    init_lower: float = Field(default=0.3, ge=0.0, le=1.0)
    init_capacity: float = Field(default=0.5, ge=0.0)
    w1: float = Field(default=0.3, ge=0)
    w2: float = Field(default=0.1, ge=0)
    w3: float = Field(default=0.005, ge=0)
    w1c: float = Field(default=0.2, ge=0)
    w2c: float = Field(default=0.1, ge=0)
    w3c: float = Field(default=0.005, ge=0)
    tau: int = Field(default=10, ge=0, description="Endgame nest-delay increment per round")

    @property
    def weights(self) -> AdaptationWeights:
        return AdaptationWeights(
            w1=self.w1, w2=self.w2, w3=self.w3, w1c=self.w1c, w2c=self.w2c, w3c=self.w3c
        )


class LabellaSettings(BaseSettings):
    """Departure-probability baseline."""

    model_config = SettingsConfigDict(
        env_prefix="LABELLA_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    p_init: float = Field(default=0.033, ge=0.0, le=1.0)
    p_min: float = Field(default=0.0015, ge=0.0, le=1.0)
    p_max: float = Field(default=0.05, ge=0.0, le=1.0)
    delta: float = Field(default=0.005, ge=0.0)

    @model_validator(mode="after")
    def _ordered(self) -> "LabellaSettings":
        if not self.p_min <= self.p_init <= self.p_max:
            raise ValueError("expected p_min <= p_init <= p_max")
        return self


class LiuSettings(BaseSettings):
    """
    Adaptive search-time baseline.

    These defaults are not published values; they are sized to the default
    arena and rates.
    """

    model_config = SettingsConfigDict(
        env_prefix="LIU_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    t_init: int = Field(default=200, gt=0)
    step_up: int = Field(default=20, ge=0)
    step_down: int = Field(default=10, ge=0)
    t_min: int = Field(default=50, gt=0)
    t_max: int = Field(default=1000, gt=0)

    @model_validator(mode="after")
    def _ordered(self) -> "LiuSettings":
        if not self.t_min <= self.t_init <= self.t_max:
            raise ValueError("expected t_min <= t_init <= t_max")
        return self


class ExperimentSettings(BaseSettings):
    """Sweep dimensions, seeding and output."""

    model_config = SettingsConfigDict(
        env_prefix="EXPERIMENT_",
        env_file=".env",
        case_sensitive=False,
        extra="ignore"
    )

    strategies: list[Strategy] = Field(default_factory=lambda: list(Strategy))
    sizes: list[int] = Field(default_factory=lambda: list(DEFAULT_SWARM_SIZES))
    replicates: int = Field(default=20, ge=1)
    seed: int = Field(default=42, ge=0)
    output: str = Field(default="results/sweep.csv")
    workers: int = Field(default=1, ge=1, description="Parallel worker processes")
    desk_scale: bool = Field(default=False, description=f"Drop sizes above {DESK_SCALE_MAX_SIZE}")

    @field_validator("strategies")
    @classmethod
    def _strategies_non_empty(cls, v: list[Strategy]) -> list[Strategy]:
        if not v:
            raise ValueError("at least one strategy is required")
        return list(dict.fromkeys(v))

    @field_validator("sizes")
    @classmethod
    def _sizes_positive(cls, v: list[int]) -> list[int]:
        if not v:
            raise ValueError("at least one swarm size is required")
        if any(size <= 0 for size in v):
            raise ValueError("swarm sizes must be positive")
        return v

    @property
    def effective_sizes(self) -> list[int]:
        if not self.desk_scale:
            return list(self.sizes)
        trimmed = [size for size in self.sizes if size <= DESK_SCALE_MAX_SIZE]
        return trimmed or [min(self.sizes)]


class ObservabilityConfig(BaseSettings):
    """Configurações de observabilidade."""

    model_config = SettingsConfigDict(
        env_prefix="OBS_",
        env_file=".env",
        case_sensitive=False,
        populate_by_name=True,
        extra="ignore"
    )

    # Logging
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="text")
    log_file: Optional[str] = Field(default=None)

    # Logfire
    logfire_enabled: bool = Field(default=False)
    logfire_token: Optional[str] = Field(default=None, alias="LOGFIRE_TOKEN")

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, v: str) -> str:
        allowed = {"DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"}
        if v.upper() not in allowed:
            raise ValueError(f"log_level must be one of {sorted(allowed)}")
        return v.upper()

    @field_validator("log_format")
    @classmethod
    def _known_format(cls, v: str) -> str:
        if v not in {"json", "text"}:
            raise ValueError("log_format must be 'json' or 'text'")
        return v


class Settings(BaseSettings):
    """Configurações principais do simulador."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        case_sensitive=False,
        extra="ignore"
    )

    # Meta
    app_name: str = Field(default="swarm-forage")
    app_version: str = Field(default="0.1.0")

    # Sub-configurações
    arena: ArenaSettings = Field(default_factory=ArenaSettings)
    energy: EnergySettings = Field(default_factory=EnergySettings)
    adaptation: AdaptationSettings = Field(default_factory=AdaptationSettings)
    labella: LabellaSettings = Field(default_factory=LabellaSettings)
    liu: LiuSettings = Field(default_factory=LiuSettings)
    experiment: ExperimentSettings = Field(default_factory=ExperimentSettings)
    observability: ObservabilityConfig = Field(default_factory=ObservabilityConfig)


SECTIONS: dict[str, type[BaseSettings]] = {
    "arena": ArenaSettings,
    "energy": EnergySettings,
    "adaptation": AdaptationSettings,
    "labella": LabellaSettings,
    "liu": LiuSettings,
    "experiment": ExperimentSettings,
    "observability": ObservabilityConfig,
}


@lru_cache()
def get_settings() -> Settings:
    """Retorna instância singleton das configurações."""
    return Settings()
