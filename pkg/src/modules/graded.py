"""Finitely supported graded vectors and per-degree subspaces of F^sigma(lambda)."""
from dataclasses import dataclass
from typing import Any, Dict, Iterable, List, Mapping, Sequence, Tuple
from sympy.polys.domains import QQ
from src.fields import Degree
from src.utils.errors import DomainError
from src.utils.linalg import RowSpace, Scalar, Vector, ZERO, add, scale
from src.utils.rationals import format_rationals, parse_rational


@dataclass(frozen=True)
class GradedVector:
    """sum_n v_n (x) q^n, stored as (degree, coefficients) pairs sorted by degree.

    Zero coefficient vectors are never stored.
    """

    dim: int
    support: Tuple[Tuple[Degree, Vector], ...] = ()

    @classmethod
    def from_mapping(cls, dim: int, parts: Mapping[Degree, Sequence[object]]) -> "GradedVector":
        cleaned = []
        for n, coeffs in parts.items():
            if len(coeffs) != dim:
                raise DomainError(f"coefficient vector of length {len(coeffs)} in a module of dim {dim}")
            values = tuple(QQ.convert(c) for c in coeffs)
            if any(values):
                cleaned.append((tuple(int(x) for x in n), values))
        return cls(dim=dim, support=tuple(sorted(cleaned)))

    @classmethod
    def homogeneous(cls, dim: int, n: Sequence[int], coeffs: Sequence[object]) -> "GradedVector":
        return cls.from_mapping(dim, {tuple(n): coeffs})

    @classmethod
    def zero(cls, dim: int) -> "GradedVector":
        return cls(dim=dim)

    def as_dict(self) -> Dict[Degree, Vector]:
        return dict(self.support)

    @property
    def degrees(self) -> List[Degree]:
        return [n for n, _ in self.support]

    def at(self, n: Sequence[int]) -> Vector:
        return self.as_dict().get(tuple(n), tuple([ZERO] * self.dim))

    def is_zero(self) -> bool:
        return not self.support

    def is_homogeneous(self) -> bool:
        return len(self.support) == 1

    @property
    def degree(self) -> Degree:
        if not self.is_homogeneous():
            raise DomainError(f"vector supported on {len(self.support)} degrees is not homogeneous")
        return self.support[0][0]

    @property
    def coefficients(self) -> Vector:
        return self.at(self.degree)

    def __add__(self, other: "GradedVector") -> "GradedVector":
        if self.dim != other.dim:
            raise DomainError(f"adding graded vectors of dims {self.dim} and {other.dim}")
        parts = self.as_dict()
        for n, coeffs in other.support:
            parts[n] = add(parts[n], coeffs) if n in parts else coeffs
        return GradedVector.from_mapping(self.dim, parts)

    def scaled(self, c: object) -> "GradedVector":
        c = QQ.convert(c)
        return GradedVector.from_mapping(self.dim, {n: scale(c, v) for n, v in self.support})

    def __neg__(self) -> "GradedVector":
        return self.scaled(-1)

    def __sub__(self, other: "GradedVector") -> "GradedVector":
        return self + (-other)

    def to_json(self) -> List[Dict[str, Any]]:
        return [{"n": list(n), "coeffs": format_rationals(v)} for n, v in self.support]

    @classmethod
    def from_json(cls, dim: int, data: Iterable[Mapping[str, Any]]) -> "GradedVector":
        parts: Dict[Degree, Vector] = {}
        for item in data:
            n = tuple(int(x) for x in item["n"])
            coeffs = tuple(parse_rational(str(c)) for c in item["coeffs"])
            parts[n] = add(parts[n], coeffs) if n in parts else coeffs
        return cls.from_mapping(dim, parts)


class GradedSubspace:
    """Per-degree row-reduced bases of a graded subspace, keyed by degree."""

    def __init__(self, dim: int):
        self.dim = dim
        self.pieces: Dict[Degree, RowSpace] = {}

    def piece(self, n: Sequence[int]) -> RowSpace:
        key = tuple(n)
        if key not in self.pieces:
            self.pieces[key] = RowSpace(self.dim)
        return self.pieces[key]

    def rank(self, n: Sequence[int]) -> int:
        space = self.pieces.get(tuple(n))
        return space.rank if space is not None else 0

    def insert(self, vector: GradedVector) -> bool:
        """Insert every homogeneous component; True when some rank grew."""
        grew = False
        for n, coeffs in vector.support:
            grew = self.piece(n).insert(coeffs) or grew
        return grew

    def contains(self, vector: GradedVector) -> bool:
        return all(
            tuple(n) in self.pieces and self.pieces[tuple(n)].contains(coeffs)
            for n, coeffs in vector.support
        )

    def ranks(self, degrees: Iterable[Degree]) -> Dict[Degree, int]:
        return {tuple(n): self.rank(n) for n in degrees}

    def __repr__(self) -> str:
        return f"<GradedSubspace(dim={self.dim}, degrees={len(self.pieces)})>"
