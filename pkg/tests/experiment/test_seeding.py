"""
Derivação de sementes filhas.
"""

from app.experiment.seeding import derive_seed, strategy_key
from app.strategies.base import Strategy


class TestDeriveSeed:
    def test_stable(self):
        assert derive_seed(42, "naive", 8, 0) == derive_seed(42, Strategy.NAIVE, 8, 0)

    def test_distinct_across_sweep(self):
        seeds = {
            derive_seed(42, strategy, size, replicate)
            for strategy in Strategy
            for size in (2, 4, 8, 16, 32, 64, 128, 256)
            for replicate in range(20)
        }
        assert len(seeds) == len(Strategy) * 8 * 20

    def test_master_seed_matters(self):
        assert derive_seed(1, "naive", 8, 0) != derive_seed(2, "naive", 8, 0)

    def test_keyed_by_name(self):
        assert strategy_key("liu") == strategy_key(Strategy.LIU)
        assert strategy_key("liu") != strategy_key("liu+null")

    def test_fits_uint64(self):
        assert 0 <= derive_seed(42, "liu", 256, 19) < 2**64
