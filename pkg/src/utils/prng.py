import random
from typing import Sequence, Tuple
from src.config import settings
from .linalg import Vector, q

MASK64 = 2**64 - 1


class Sampler:
    """Deterministic source of small exact test data.

    Coefficients are integers in [-bound, bound]; the state is seeded from a
    64-bit integer so runs are reproducible.
    """

    def __init__(self, seed: int, bound: int | None = None):
        self.seed = seed & MASK64
        self.bound = bound if bound is not None else settings.coefficient_bound
        self._random = random.Random(self.seed)

    def integer(self, low: int | None = None, high: int | None = None) -> int:
        lo = -self.bound if low is None else low
        hi = self.bound if high is None else high
        return self._random.randint(lo, hi)

    def nonzero_integer(self) -> int:
        value = 0
        while value == 0:
            value = self.integer()
        return value

    def integers(self, count: int, radius: int) -> Tuple[int, ...]:
        return tuple(self._random.randint(-radius, radius) for _ in range(count))

    def vector(self, dim: int, nonzero: bool = True) -> Vector:
        while True:
            values = tuple(q(self.integer()) for _ in range(dim))
            if not nonzero or any(values):
                return values

    def choice(self, items: Sequence[object]) -> object:
        return items[self._random.randrange(len(items))]

    def degree(self, rank: int, radius: int, center: Sequence[int] | None = None) -> Tuple[int, ...]:
        base = center if center is not None else (0,) * rank
        return tuple(c + self._random.randint(-radius, radius) for c in base)

    def spawn(self, salt: int) -> "Sampler":
        """Independent child stream for the same seed."""
        return Sampler((self.seed * 6364136223846793005 + salt) & MASK64, self.bound)
