"""
Configurações do simulador.
"""

from .loader import load_settings, parse_config_text
from .settings import Settings, get_settings

__all__ = ["get_settings", "load_settings", "parse_config_text", "Settings"]
