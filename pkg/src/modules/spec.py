from functools import lru_cache
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from src.config import settings
from src.fields import Degree, VectorField
from src.representations import Irrep, build_irrep, build_wedge
from src.utils.errors import DomainError
from src.utils.linalg import Scalar, Vector, trace
from src.utils.rationals import format_rationals, is_integral


class ModuleSpec:
    """F^sigma(lambda) = V(lambda) (x) C[q^{+-1}]: the data needed to act on it."""

    def __init__(self, rep: Irrep, sigma: Iterable[object]):
        self.rep = rep
        self.sigma: Vector = tuple(QQ.convert(s) for s in sigma)
        if len(self.sigma) != rep.N + 1:
            raise DomainError(f"sigma has {len(self.sigma)} entries, expected N+1={rep.N + 1}")
        self._operator = lru_cache(maxsize=settings.operator_cache_size)(self._build_operator)
        self._rows = lru_cache(maxsize=settings.operator_cache_size)(self._build_rows)

    @classmethod
    def for_label(cls, N: int, lam: Sequence[int], sigma: Iterable[object]) -> "ModuleSpec":
        return cls(build_irrep(N, lam), sigma)

    @classmethod
    def for_wedge(cls, N: int, k: int, sigma: Iterable[object]) -> "ModuleSpec":
        return cls(build_wedge(N, k), sigma)

    @property
    def N(self) -> int:
        return self.rep.N

    @property
    def lam(self) -> Tuple[int, ...]:
        return self.rep.lam

    @property
    def dim(self) -> int:
        return self.rep.dim

    @property
    def sigma_integral(self) -> bool:
        return is_integral(self.sigma)

    @property
    def degenerate_degree(self) -> Optional[Degree]:
        """-sigma, the only degree where n + sigma can vanish."""
        if not self.sigma_integral:
            return None
        return tuple(-int(s.numerator) for s in self.sigma)

    @property
    def wedge_degree(self) -> Optional[int]:
        if self.rep.wedge_basis is None:
            return None
        return len(self.rep.wedge_basis[0])

    def shifted(self, n: Sequence[int]) -> Vector:
        """n + sigma."""
        return tuple(QQ(x) + s for x, s in zip(n, self.sigma))

    def check_degree(self, n: Sequence[int]) -> Degree:
        if len(n) != self.N + 1:
            raise DomainError(f"degree {tuple(n)} has {len(n)} entries, expected {self.N + 1}")
        return tuple(int(x) for x in n)

    def _check_field(self, f: VectorField) -> None:
        if f.rank != self.N:
            raise DomainError(f"field of rank {f.rank} acting on a rank {self.N} module")
        if not f.is_divergence_zero():
            raise DomainError(f"field {f} is not divergence-zero")

    def field_operator(self, f: VectorField) -> DomainMatrix:
        """The matrix of r u^T acting on V(lambda); traceless since (u|r) = 0."""
        self._check_field(f)
        return self._operator(f.u, f.r)

    def operator_rows(self, f: VectorField) -> List[List[Scalar]]:
        self._check_field(f)
        return self._rows(f.u, f.r)

    def cache_info(self) -> Tuple[int, int, Optional[int], int]:
        """Hits, misses and size of the field-matrix cache."""
        return self._operator.cache_info()

    def _build_operator(self, u: Vector, r: Degree) -> DomainMatrix:
        coefficients = {
            (i, j): QQ(r[i - 1]) * u[j - 1]
            for i in range(1, self.N + 2)
            for j in range(1, self.N + 2)
        }
        return self.rep.operator(coefficients)

    def _build_rows(self, u: Vector, r: Degree) -> List[List[Scalar]]:
        return self._operator(u, r).to_list()

    def operator_trace(self, f: VectorField) -> Scalar:
        return trace(self.field_operator(f))

    def describe(self) -> Dict[str, object]:
        return {
            "N": self.N,
            "lambda": list(self.lam),
            "sigma": format_rationals(self.sigma),
            "dim": self.dim,
        }

    def __repr__(self) -> str:
        return f"<ModuleSpec(N={self.N}, lambda={self.lam}, sigma={format_rationals(self.sigma)})>"
