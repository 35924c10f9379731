"""
Child-seed derivation for sweeps.

Seeds are keyed by strategy name (not its position in the list), swarm size
and replicate index, so reordering a sweep never changes a run.
"""

import zlib

import numpy as np

from app.strategies.base import Strategy


def strategy_key(strategy: Strategy | str) -> int:
    name = strategy.value if isinstance(strategy, Strategy) else strategy
    return zlib.crc32(name.encode("utf-8"))


def derive_seed(master_seed: int, strategy: Strategy | str, swarm_size: int, replicate: int) -> int:
    """64-bit child seed for one (strategy, K, replicate) run."""
    sequence = np.random.SeedSequence([master_seed, strategy_key(strategy), swarm_size, replicate])
    return int(sequence.generate_state(1, dtype=np.uint64)[0])
