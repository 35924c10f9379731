"""
Arena, kinematics and resource handling.
"""

from .kinematics import move, reflect
from .resources import ResourcePool
from .world import World

__all__ = ["ResourcePool", "World", "move", "reflect"]
