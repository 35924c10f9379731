"""
Exception hierarchy for the foraging simulator.

Every failure the CLI maps to an exit code derives from SwarmForageError.
"""


class SwarmForageError(Exception):
    """Base class for all simulator errors."""


class ConfigError(SwarmForageError):
    """Invalid settings, config file or strategy name."""

    def __init__(self, message: str, field: str | None = None) -> None:
        self.field = field
        super().__init__(f"{field}: {message}" if field else message)


class SimulationFault(SwarmForageError):
    """A state-machine or world contract was violated during a run."""


class UndefinedMetricError(SwarmForageError):
    """An efficiency metric was requested on data where it is not defined."""
