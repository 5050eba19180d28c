from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

DEFAULT_TOLERANCE = 1e-10
DEFAULT_MAX_ROUNDS = 1_000_000


@dataclass(frozen=True)
class ConvergenceConfig:
    """Finite stopping rule for the consensus iterations.

    A phase stops at the first round whose max-norm change drops below
    ``tolerance``. ``trace_every`` samples the iteration state every k rounds
    (round 0 and the final round are always included).
    """

    tolerance: float = DEFAULT_TOLERANCE
    max_rounds: int = DEFAULT_MAX_ROUNDS
    trace_every: Optional[int] = None

    def __post_init__(self):
        if not self.tolerance > 0:
            raise ValueError(f"tolerance must be positive, got {self.tolerance!r}")
        if int(self.max_rounds) != self.max_rounds or self.max_rounds < 1:
            raise ValueError(f"max_rounds must be a positive integer, got {self.max_rounds!r}")
        if self.trace_every is not None and (int(self.trace_every) != self.trace_every or self.trace_every < 1):
            raise ValueError(f"trace_every must be a positive integer, got {self.trace_every!r}")

    def sampled(self, t: int) -> bool:
        return self.trace_every is not None and t % self.trace_every == 0
