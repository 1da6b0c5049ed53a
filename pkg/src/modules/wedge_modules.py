"""The wedge submodules W_k, W~_k of F^sigma(omega_k) and the maps psi_k.

psi_k sends w(n) to (n+sigma) ^ w(n); its kernel is W~_k and its image
W_{k+1}, degree by degree.
"""
from dataclasses import dataclass
from itertools import combinations
from math import comb
from typing import Dict, Iterable, List, Optional, Sequence
from sympy.polys.matrices import DomainMatrix
from src.fields import Degree, VectorField
from src.representations import wedge_map_matrix, wedge_vector, wedge_with
from src.utils.errors import DomainError
from src.utils.linalg import RowSpace, Vector, apply_rows, matrix, nullspace_rows, unit_vector
from .action import act_homogeneous
from .graded import GradedVector
from .spec import ModuleSpec


def _require_wedge(spec: ModuleSpec) -> int:
    k = spec.wedge_degree
    if k is None:
        raise DomainError(f"{spec!r} is not a wedge module F^sigma(omega_k)")
    return k


class WedgeSubmodule:
    """W_k^sigma, or W~_k^sigma when ``tilde`` is set."""

    def __init__(self, spec: ModuleSpec, tilde: bool = False):
        self.spec = spec
        self.k = _require_wedge(spec)
        self.tilde = tilde
        self._pieces: Dict[Degree, RowSpace] = {}

    def piece(self, n: Sequence[int]) -> RowSpace:
        """Row-reduced basis of the degree-n piece."""
        key = self.spec.check_degree(n)
        if key in self._pieces:
            return self._pieces[key]
        spec = self.spec
        space = RowSpace(spec.dim)
        if self.tilde and key == spec.degenerate_degree:
            for idx in range(spec.dim):
                space.insert(unit_vector(spec.dim, idx))
        elif self.k > 0:
            direction = spec.shifted(key)
            for lower in combinations(range(1, spec.N + 2), self.k - 1):
                expansion = wedge_with(direction, lower)
                if expansion:
                    space.insert(wedge_vector(spec.rep, expansion))
        self._pieces[key] = space
        return space

    def expected_rank(self, n: Sequence[int]) -> int:
        key = self.spec.check_degree(n)
        if self.tilde and key == self.spec.degenerate_degree:
            return self.spec.dim
        if key == self.spec.degenerate_degree or self.k == 0:
            return 0
        return comb(self.spec.N, self.k - 1)

    def contains(self, w: GradedVector) -> bool:
        return all(self.piece(n).contains(coeffs) for n, coeffs in w.support)

    def invariance_failures(
        self, fields: Iterable[VectorField], degrees: Iterable[Degree]
    ) -> List[tuple]:
        """(field, degree) pairs whose action leaves the submodule."""
        failures = []
        field_list = list(fields)
        for n in degrees:
            for f in field_list:
                target = tuple(a + b for a, b in zip(n, f.r))
                for row in self.piece(n).basis():
                    image = act_homogeneous(self.spec, f, n, row)
                    if not self.piece(target).contains(image):
                        failures.append((f, n))
                        break
        return failures


def psi_target(spec: ModuleSpec) -> ModuleSpec:
    """The module F^sigma(omega_{k+1}) that psi_k maps into."""
    k = _require_wedge(spec)
    if k > spec.N:
        raise DomainError(f"psi_k is defined for 0 <= k <= N, got k={k}")
    return ModuleSpec.for_wedge(spec.N, k + 1, spec.sigma)


def psi_matrix(spec: ModuleSpec, target: ModuleSpec, n: Sequence[int]) -> DomainMatrix:
    """Degree-n matrix of psi_k, of shape C(N+1,k+1) x C(N+1,k)."""
    k = _require_wedge(spec)
    if k > spec.N:
        raise DomainError(f"psi_k is defined for 0 <= k <= N, got k={k}")
    if target.wedge_degree != k + 1 or target.sigma != spec.sigma:
        raise DomainError(f"{target!r} is not the psi target of {spec!r}")
    rows = wedge_map_matrix(spec.rep, target.rep, spec.shifted(spec.check_degree(n)))
    return matrix(rows, spec.dim)


def psi(spec: ModuleSpec, w: GradedVector, target: Optional[ModuleSpec] = None) -> GradedVector:
    """psi_k applied degreewise: w(n) -> (n+sigma) ^ w(n)."""
    target = target if target is not None else psi_target(spec)
    parts = {}
    for n, coeffs in w.support:
        parts[n] = apply_rows(psi_matrix(spec, target, n).to_list(), coeffs)
    return GradedVector.from_mapping(target.dim, parts)


def quotient_piece(spec: ModuleSpec, n: Sequence[int]) -> List[Vector]:
    """Coset representatives of (V(omega_k) (x) q^n) / W~_k piece."""
    return WedgeSubmodule(spec, tilde=True).piece(n).complement()


@dataclass(frozen=True)
class DerhamDegreeCheck:
    k: int
    degree: Degree
    kernel_rank: int
    tilde_rank: int
    image_rank: int
    next_rank: int
    quotient_dim: int
    kernel_matches: bool
    image_matches: bool
    composition_zero: bool

    @property
    def passed(self) -> bool:
        return self.kernel_matches and self.image_matches and self.composition_zero


def derham_degree_check(spec: ModuleSpec, n: Sequence[int]) -> DerhamDegreeCheck:
    """ker psi_k = W~_k, im psi_k = W_{k+1} and psi_{k+1} psi_k = 0 at one degree."""
    k = _require_wedge(spec)
    key = spec.check_degree(n)
    target = psi_target(spec)
    mat = psi_matrix(spec, target, key)
    rows = mat.to_list()

    kernel = RowSpace(spec.dim, nullspace_rows(mat))
    tilde = WedgeSubmodule(spec, tilde=True).piece(key)
    kernel_matches = kernel.issubspace(tilde) and tilde.issubspace(kernel)

    image = RowSpace(target.dim, [tuple(row[c] for row in rows) for c in range(spec.dim)])
    following = WedgeSubmodule(target).piece(key)
    image_matches = image.issubspace(following) and following.issubspace(image)

    composition_zero = True
    if k + 1 <= spec.N:
        after = psi_matrix(target, psi_target(target), key)
        composition_zero = not any(any(row) for row in after.matmul(mat).to_list())

    return DerhamDegreeCheck(
        k=k,
        degree=key,
        kernel_rank=kernel.rank,
        tilde_rank=tilde.rank,
        image_rank=image.rank,
        next_rank=following.rank,
        quotient_dim=len(quotient_piece(spec, key)),
        kernel_matches=kernel_matches,
        image_matches=image_matches,
        composition_zero=composition_zero,
    )
