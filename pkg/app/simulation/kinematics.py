"""
Abstract 2D kinematics: correlated random walk while searching, straight
line home while retreating, specular reflection at the arena walls.
"""

import math

import numpy as np

from app.models.robot import Robot, RobotState

TWO_PI = 2.0 * math.pi


def reflect(x: float, y: float, heading: float, width: float, height: float) -> tuple[float, float, float]:
    """Fold a position back into [0, width] x [0, height], mirroring the heading."""
    if x < 0.0:
        x, heading = -x, math.pi - heading
    elif x > width:
        x, heading = 2.0 * width - x, math.pi - heading
    if y < 0.0:
        y, heading = -y, -heading
    elif y > height:
        y, heading = 2.0 * height - y, -heading
    # a step longer than the arena could still overshoot after one fold
    x = min(max(x, 0.0), width)
    y = min(max(y, 0.0), height)
    return x, y, heading % TWO_PI


def heading_away(x: float, y: float, other: tuple[float, float]) -> float:
    """Heading pointing from `other` through (x, y)."""
    return math.atan2(y - other[1], x - other[0]) % TWO_PI


def move(
    robot: Robot,
    motion: RobotState,
    *,
    speed: float,
    turn_noise: float,
    width: float,
    height: float,
    home: tuple[float, float],
    rng: np.random.Generator,
) -> None:
    """
    Advance `robot` by one tick of motion in state `motion`.

    Searching robots turn by uniform(-turn_noise, +turn_noise) and step
    forward; retreating robots head for `home` and stop on it.
    """
    if motion is RobotState.SEARCHING:
        heading = robot.heading + rng.uniform(-turn_noise, turn_noise)
        x = robot.x + speed * math.cos(heading)
        y = robot.y + speed * math.sin(heading)
        robot.x, robot.y, robot.heading = reflect(x, y, heading, width, height)
    elif motion is RobotState.RETREATING:
        dx = home[0] - robot.x
        dy = home[1] - robot.y
        distance = math.hypot(dx, dy)
        if distance <= speed:
            robot.x, robot.y = home
        else:
            robot.x += speed * dx / distance
            robot.y += speed * dy / distance
            robot.heading = math.atan2(dy, dx) % TWO_PI
