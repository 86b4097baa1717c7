from dataclasses import dataclass


@dataclass(frozen=True)
class GrowthBudget:
    """Limits for exact evaluation of fast-growing functions."""
    max_bits: int = 4096
    max_steps: int = 1_000_000

    def __post_init__(self):
        assert self.max_bits > 0, 'max_bits must be positive'
        assert self.max_steps > 0, 'max_steps must be positive'
