"""Homogeneous vector fields D(u, r) = sum_i u_i t^r d_i on the (N+1)-torus."""
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Sequence, Tuple
from sympy.polys.domains import QQ
from src.utils.errors import ConfigError, DomainError
from src.utils.linalg import Scalar, Vector, ZERO, add, dot, scale, vector
from src.utils.rationals import format_rational, parse_rational, parse_int_list

Degree = Tuple[int, ...]

_FIELD = re.compile(r"^\s*D\(\s*\[([^\]]*)\]\s*,\s*\[([^\]]*)\]\s*\)\s*$")


@dataclass(frozen=True)
class VectorField:
    u: Vector
    r: Degree

    def __post_init__(self) -> None:
        if len(self.u) != len(self.r):
            raise DomainError(f"D(u, r) with len(u)={len(self.u)} and len(r)={len(self.r)}")
        if len(self.u) < 2:
            raise DomainError("vector fields need at least two torus coordinates")

    @classmethod
    def of(cls, u: Iterable[object], r: Iterable[int]) -> "VectorField":
        return cls(u=vector(u), r=tuple(int(x) for x in r))

    @classmethod
    def cartan(cls, rank: int, a: int) -> "VectorField":
        """d_a = D(e_a, 0), 1-based."""
        return cls.of([1 if p == a else 0 for p in range(1, rank + 2)], [0] * (rank + 1))

    @property
    def rank(self) -> int:
        """N, for fields on the (N+1)-torus."""
        return len(self.u) - 1

    def is_divergence_zero(self) -> bool:
        return not dot(self.u, self.r)

    def is_zero(self) -> bool:
        return not any(self.u)

    def scaled(self, c: Scalar) -> "VectorField":
        return VectorField(u=scale(QQ.convert(c), self.u), r=self.r)

    def bracket(self, other: "VectorField") -> "VectorField":
        """[D(u,r), D(v,s)] = D((u|s)v - (v|r)u, r+s)."""
        if self.rank != other.rank:
            raise DomainError(f"bracket of fields of rank {self.rank} and {other.rank}")
        w = add(scale(dot(self.u, other.r), other.u), scale(-dot(other.u, self.r), self.u))
        return VectorField(u=w, r=tuple(a + b for a, b in zip(self.r, other.r)))

    def apply_to_monomial(self, m: Sequence[int]) -> Tuple[Scalar, Degree]:
        """D(u,r) t^m = (u|m) t^{m+r}."""
        if len(m) != len(self.r):
            raise DomainError(f"monomial degree {tuple(m)} for a field of rank {self.rank}")
        return dot(self.u, m), tuple(a + b for a, b in zip(m, self.r))

    def __str__(self) -> str:
        return format_field(self)


class FieldSum:
    """Finite sum of homogeneous fields, merged by r with zero terms pruned."""

    def __init__(self, fields: Iterable[VectorField] = ()):
        self.terms: Dict[Degree, Vector] = {}
        self.rank: int | None = None
        for f in fields:
            self._add_term(f.r, f.u)

    def _add_term(self, r: Degree, u: Vector) -> None:
        if self.rank is None:
            self.rank = len(r) - 1
        elif len(r) - 1 != self.rank:
            raise DomainError(f"field of rank {len(r) - 1} added to a sum of rank {self.rank}")
        merged = add(self.terms[r], u) if r in self.terms else tuple(u)
        if any(merged):
            self.terms[r] = merged
        else:
            self.terms.pop(r, None)

    def fields(self) -> List[VectorField]:
        return [VectorField(u=self.terms[r], r=r) for r in sorted(self.terms)]

    def __add__(self, other: "FieldSum") -> "FieldSum":
        result = FieldSum(self.fields())
        for f in other.fields():
            result._add_term(f.r, f.u)
        return result

    def __sub__(self, other: "FieldSum") -> "FieldSum":
        return self + other.scaled(-QQ.one)

    def scaled(self, c: Scalar) -> "FieldSum":
        return FieldSum(f.scaled(c) for f in self.fields())

    def bracket(self, other: "FieldSum") -> "FieldSum":
        return FieldSum(f.bracket(g) for f in self.fields() for g in other.fields())

    def is_zero(self) -> bool:
        return not self.terms

    def is_divergence_zero(self) -> bool:
        return all(f.is_divergence_zero() for f in self.fields())

    def apply_to_monomial(self, m: Sequence[int]) -> Dict[Degree, Scalar]:
        result: Dict[Degree, Scalar] = {}
        for f in self.fields():
            c, degree = f.apply_to_monomial(m)
            if c:
                result[degree] = result.get(degree, ZERO) + c
        return {d: c for d, c in result.items() if c}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSum):
            return NotImplemented
        return self.terms == other.terms

    def __repr__(self) -> str:
        return f"FieldSum({', '.join(format_field(f) for f in self.fields())})"


def format_field(f: VectorField) -> str:
    """Text form "D([1,-1,0],[1,1,0])"."""
    u = ",".join(format_rational(x) for x in f.u)
    r = ",".join(str(x) for x in f.r)
    return f"D([{u}],[{r}])"


def parse_field(text: str) -> VectorField:
    match = _FIELD.match(text)
    if not match:
        raise ConfigError(f"not a field of the form D([u...],[r...]): {text!r}")
    u = tuple(parse_rational(part) for part in match.group(1).split(","))
    r = parse_int_list(match.group(2))
    try:
        return VectorField(u=u, r=r)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc
