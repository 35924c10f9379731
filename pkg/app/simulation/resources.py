"""
Resource placement and the respawn rule.

Live resources are replenished on every pickup until `target_collected`
pickups have happened. At that point the pool is thinned once, at random, to
`final_remaining` resources, and those deplete without replacement.
"""

import numpy as np

from config.settings import ArenaSettings


class ResourcePool:
    """Live resource positions plus pickup / respawn counters."""

    def __init__(
        self,
        arena: ArenaSettings,
        rng: np.random.Generator,
        positions: list[tuple[float, float]] | None = None,
    ) -> None:
        self.arena = arena
        self.rng = rng
        self.target_collected = arena.target_collected
        self.final_remaining = arena.final_remaining
        self.collected_total = 0
        self.respawned_total = 0
        self.retired_total = 0
        self._pending_respawns = 0
        self._thinned = False
        if positions is None:
            positions = [self._sample() for _ in range(arena.initial_resources)]
        self.initial_count = len(positions)
        self.live = np.array(positions, dtype=float).reshape(-1, 2)

    def _sample(self) -> tuple[float, float]:
        """Uniform position in the arena, outside the nest."""
        while True:
            x = float(self.rng.uniform(0.0, self.arena.width))
            y = float(self.rng.uniform(0.0, self.arena.height))
            if not self.arena.in_nest(x, y):
                return x, y

    def __len__(self) -> int:
        return len(self.live)

    @property
    def saturated(self) -> bool:
        """True once respawning has stopped for good."""
        return self.collected_total >= self.target_collected

    @property
    def exhausted(self) -> bool:
        return self.saturated and len(self.live) == 0 and self._pending_respawns == 0

    def nearest_within(self, x: float, y: float, radius: float) -> int | None:
        """Index of the closest live resource within `radius`, if any."""
        if len(self.live) == 0:
            return None
        d2 = (self.live[:, 0] - x) ** 2 + (self.live[:, 1] - y) ** 2
        index = int(np.argmin(d2))
        return index if d2[index] <= radius * radius else None

    def take(self, index: int) -> None:
        """Remove a picked-up resource and queue its replacement if still respawning."""
        self.live = np.delete(self.live, index, axis=0)
        self.collected_total += 1
        if self.collected_total <= self.target_collected:
            self._pending_respawns += 1

    def flush_respawns(self) -> None:
        """Place the replacements queued during this tick, then thin the pool once saturated."""
        if self._pending_respawns:
            fresh = np.array([self._sample() for _ in range(self._pending_respawns)], dtype=float)
            self.live = np.vstack([self.live, fresh])
            self.respawned_total += self._pending_respawns
            self._pending_respawns = 0
        if self.saturated and not self._thinned:
            self._thin()

    def _thin(self) -> None:
        self._thinned = True
        surplus = len(self.live) - self.final_remaining
        if surplus <= 0:
            return
        keep = np.sort(self.rng.choice(len(self.live), size=self.final_remaining, replace=False))
        self.live = self.live[keep]
        self.retired_total = surplus
