"""
Battery and per-round energy models.

Energy is normalised: 1.0 is the full physical capacity of a robot battery.
"""

from typing import Annotated

from pydantic import BaseModel, ConfigDict, Field, model_validator

FULL_CHARGE = 1.0

EnergyLevel = Annotated[float, Field(ge=0.0, le=FULL_CHARGE, allow_inf_nan=False)]


class EnergyRates(BaseModel):
    """Constant energy costs of foraging."""

    model_config = ConfigDict(frozen=True)

    alpha_s: float = Field(default=0.001, gt=0, allow_inf_nan=False, description="Searching drain per tick")
    alpha_r: float = Field(default=0.001, gt=0, allow_inf_nan=False, description="Retreating drain per tick")
    p: float = Field(default=0.01, ge=0, allow_inf_nan=False, description="Cost of collecting a resource")


class AdaptationWeights(BaseModel):
    """Weights of the lower-threshold (w1..w3) and capacity (w1c..w3c) updates."""

    model_config = ConfigDict(frozen=True)

    w1: float = Field(default=0.3, ge=0, allow_inf_nan=False)
    w2: float = Field(default=0.1, ge=0, allow_inf_nan=False)
    w3: float = Field(default=0.005, ge=0, allow_inf_nan=False)
    w1c: float = Field(default=0.2, ge=0, allow_inf_nan=False)
    w2c: float = Field(default=0.1, ge=0, allow_inf_nan=False)
    w3c: float = Field(default=0.005, ge=0, allow_inf_nan=False)


class RoundOutcome(BaseModel):
    """Accounting for one foraging round, from departure to nest arrival."""

    model_config = ConfigDict(frozen=True)

    success: bool = Field(default=False, description="f(r): a resource was retrieved")
    encounters: int = Field(default=0, ge=0, description="v: robots encountered")
    energy_spent: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    t_search: int = Field(default=0, ge=0)
    t_retreat: int = Field(default=0, ge=0)

    @property
    def f(self) -> int:
        return 1 if self.success else 0


class Battery(BaseModel):
    """
    Energy state of one robot.

    `level` changes every tick, so assignment is not re-validated; the
    threshold fields only change through the adaptation functions in
    app.core.energy, which return fresh instances.
    """

    level: EnergyLevel
    lower: EnergyLevel
    capacity: float = Field(ge=0.0, allow_inf_nan=False)
    upper: EnergyLevel

    @model_validator(mode="after")
    def _check_thresholds(self) -> "Battery":
        if self.lower > self.upper:
            raise ValueError(f"lower threshold {self.lower} above upper threshold {self.upper}")
        return self

    @classmethod
    def initial(cls, lower: float, capacity: float) -> "Battery":
        """Battery charged to its upper threshold."""
        upper = min(FULL_CHARGE, lower + capacity)
        return cls(level=upper, lower=lower, capacity=capacity, upper=upper)

    def charged_to(self, level: float) -> "Battery":
        return self.model_copy(update={"level": level})
