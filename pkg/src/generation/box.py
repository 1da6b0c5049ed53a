from dataclasses import dataclass, field
from itertools import product
from typing import List, Optional, Sequence
from src.config import settings
from src.fields import Degree
from src.utils.errors import DomainError


@dataclass(frozen=True)
class TruncationBox:
    """Degrees with |n - center|_inf <= outer; verdicts only read the inner box."""

    outer: int
    inner: int
    center: Degree = field(default=())

    def __post_init__(self) -> None:
        if self.outer < 0 or self.inner < 0:
            raise DomainError(f"box radii must be nonnegative, got ({self.outer}, {self.inner})")
        if self.inner > self.outer:
            raise DomainError(f"inner radius {self.inner} exceeds outer radius {self.outer}")
        if not self.center:
            raise DomainError("box center must have N+1 coordinates")

    @classmethod
    def around(
        cls,
        rank: int,
        outer: Optional[int] = None,
        inner: Optional[int] = None,
        center: Optional[Sequence[int]] = None,
    ) -> "TruncationBox":
        return cls(
            outer=settings.box_outer if outer is None else outer,
            inner=settings.box_inner if inner is None else inner,
            center=tuple(center) if center is not None else (0,) * (rank + 1),
        )

    @property
    def rank(self) -> int:
        return len(self.center) - 1

    def contains(self, n: Sequence[int], inner: bool = False) -> bool:
        radius = self.inner if inner else self.outer
        return len(n) == len(self.center) and all(abs(a - c) <= radius for a, c in zip(n, self.center))

    def degrees(self, inner: bool = False) -> List[Degree]:
        """All degrees of the box in lexicographic order."""
        radius = self.inner if inner else self.outer
        ranges = [range(c - radius, c + radius + 1) for c in self.center]
        return [tuple(n) for n in product(*ranges)]
