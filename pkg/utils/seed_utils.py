import logging

logger = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
GOLDEN_GAMMA = 0x9E3779B97F4A7C15
MIX_MULTIPLIER_1 = 0xBF58476D1CE4E5B9
MIX_MULTIPLIER_2 = 0x94D049BB133111EB


class SeedUtils:
    @staticmethod
    def mix64(value: int) -> int:
        """splitmix64 finaliser."""
        z = value & MASK64
        z = ((z ^ (z >> 30)) * MIX_MULTIPLIER_1) & MASK64
        z = ((z ^ (z >> 27)) * MIX_MULTIPLIER_2) & MASK64
        return z ^ (z >> 31)

    @staticmethod
    def sub_seed(seed: int, index: int) -> int:
        return SeedUtils.mix64((seed + (index + 1) * GOLDEN_GAMMA) & MASK64)

    @staticmethod
    def sub_seed_path(seed: int, *indices: int) -> int:
        for index in indices:
            seed = SeedUtils.sub_seed(seed, index)
        return seed
