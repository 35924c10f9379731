"""
Configuração do Logfire para observabilidade do simulador.

Spans around simulation runs and sweeps. Everything here degrades to a
no-op when Logfire is not installed or not enabled.
"""

import logging
from functools import lru_cache
from typing import Any, Dict, Optional

try:
    import logfire
    LOGFIRE_AVAILABLE = True
except ImportError:
    LOGFIRE_AVAILABLE = False
    logfire = None

from config.settings import ObservabilityConfig, get_settings


class LogfireConfig:
    """Configuração centralizada do Logfire."""

    def __init__(self, observability: Optional[ObservabilityConfig] = None, version: str = "0.1.0"):
        self.observability = observability or get_settings().observability
        self.version = version
        self.configured = False
        self.logger = logging.getLogger("swarm_forage.logfire")

    def is_available(self) -> bool:
        return LOGFIRE_AVAILABLE

    def configure_logfire(self) -> bool:
        """
        Configurar Logfire.

        Returns:
            bool: True se configurado com sucesso
        """
        if not self.observability.logfire_enabled:
            return False
        if not self.is_available():
            self.logger.warning("Logfire enabled but not installed")
            return False

        try:
            token = self.observability.logfire_token
            logfire.configure(
                token=token,
                send_to_logfire=bool(token),
                service_name="swarm-forage",
                service_version=self.version,
                console=False,
            )
            self.configured = True
            self.logger.info("Logfire configured" + (" with token" if token else " in local mode"))
            return True
        except Exception as e:
            self.logger.error(f"Could not configure Logfire: {e}")
            return False

    @property
    def active(self) -> bool:
        return self.is_available() and self.configured


@lru_cache()
def get_logfire_config() -> LogfireConfig:
    """Instância singleton da configuração Logfire."""
    return LogfireConfig()


def setup_logfire(observability: Optional[ObservabilityConfig] = None) -> bool:
    """Configure the shared Logfire instance, optionally from loaded settings."""
    config = get_logfire_config()
    if observability is not None:
        config.observability = observability
    return config.configure_logfire()


class _Span:
    """Base context manager: opens a Logfire span only when Logfire is active."""

    name = "span"

    def __init__(self, attributes: Dict[str, Any]):
        self.attributes = attributes
        self.config = get_logfire_config()
        self.span = None

    def __enter__(self):
        if self.config.active:
            self.span = logfire.span(self.name, **self.attributes)
            return self.span.__enter__()
        return None

    def __exit__(self, exc_type, exc_val, exc_tb):
        if self.span:
            return self.span.__exit__(exc_type, exc_val, exc_tb)
        return None


class RunSpan(_Span):
    """Span de uma execução de simulação."""

    name = "simulation.run"

    def __init__(self, strategy: str, swarm_size: int, seed: int):
        super().__init__({"strategy": strategy, "swarm_size": swarm_size, "seed": seed})


class SweepSpan(_Span):
    """Span de uma varredura completa."""

    name = "experiment.sweep"

    def __init__(self, runs: int, strategies: list[str], sizes: list[int]):
        super().__init__({"runs": runs, "strategies": strategies, "sizes": sizes})
