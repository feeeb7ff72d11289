import time
from typing import Optional

from critcolor.core.errors import Timeout

# clock reads are amortised over this many search nodes
_TICK_INTERVAL = 256


class Budget:
    """Wall-clock allowance for one graph's exact computations."""

    def __init__(self, ms: Optional[float]):
        self.ms = ms
        self._deadline = None if not ms or ms <= 0 else time.perf_counter() + ms / 1000.0
        self._ticks = 0

    @classmethod
    def unlimited(cls) -> "Budget":
        return cls(None)

    @classmethod
    def exhausted(cls) -> "Budget":
        """A budget whose deadline has passed; the next tick raises Timeout."""
        budget = cls(1)
        budget._deadline = time.perf_counter() - 1.0
        budget._ticks = -1
        return budget

    @property
    def expired(self) -> bool:
        return self._deadline is not None and time.perf_counter() > self._deadline

    def tick(self) -> None:
        if self._deadline is None:
            return
        self._ticks += 1
        if self._ticks % _TICK_INTERVAL:
            return
        if self.expired:
            raise Timeout(f"exact search exceeded budget of {self.ms} ms")


def tick(budget: Optional[Budget]) -> None:
    if budget is not None:
        budget.tick()
