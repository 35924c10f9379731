"""
Simulador determinístico de forrageamento em enxame com alocação adaptativa de bateria.

Adaptive upper/lower energy thresholds, endgame policies and baseline
strategies, plus an experiment harness for efficiency sweeps.
"""

__version__ = "0.1.0"
__author__ = "Swarm Forage Team"

from .utils.logging import get_logger, setup_logging

__all__ = [
    "setup_logging",
    "get_logger"
]
