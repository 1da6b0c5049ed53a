"""Exterior powers of C^{N+1} with the Leibniz action of gl_{N+1}."""
from itertools import combinations
from typing import Dict, List, Sequence, Tuple
from sympy.polys.domains import QQ
from src.utils.errors import DomainError
from src.utils.linalg import Scalar, ZERO, matrix
from src.weights import AlphaOffset, offset_from_epsilon
from .irrep import Irrep

WedgeIndices = Tuple[int, ...]


def sort_with_sign(indices: Sequence[int]) -> Tuple[int, WedgeIndices]:
    """Sign of the sorting permutation and the sorted tuple; sign 0 on a repeat."""
    items = list(indices)
    if len(set(items)) != len(items):
        return 0, ()
    inversions = sum(
        1 for a in range(len(items)) for b in range(a + 1, len(items)) if items[a] > items[b]
    )
    return (-1 if inversions % 2 else 1), tuple(sorted(items))


def apply_elementary(a: int, b: int, indices: WedgeIndices) -> List[Tuple[int, WedgeIndices]]:
    """E_ab (e_{i_1} ^ ... ^ e_{i_k}) as a list of (sign, sorted indices)."""
    terms = []
    for p, index in enumerate(indices):
        if index != b:
            continue
        replaced = indices[:p] + (a,) + indices[p + 1:]
        sign, ordered = sort_with_sign(replaced)
        if sign:
            terms.append((sign, ordered))
    return terms


def wedge_with(vector: Sequence[Scalar], indices: WedgeIndices) -> Dict[WedgeIndices, Scalar]:
    """vector ^ e_I expanded on increasing index tuples."""
    result: Dict[WedgeIndices, Scalar] = {}
    for a, coeff in enumerate(vector, start=1):
        if not coeff:
            continue
        sign, ordered = sort_with_sign((a,) + tuple(indices))
        if sign:
            result[ordered] = result.get(ordered, ZERO) + sign * coeff
    return {k: v for k, v in result.items() if v}


def fundamental_label(N: int, k: int) -> Tuple[int, ...]:
    """Label of omega_k, with omega_0 = omega_{N+1} = 0."""
    return tuple(1 if p == k else 0 for p in range(1, N + 1))


def wedge_offset(N: int, k: int, indices: WedgeIndices) -> AlphaOffset:
    if k in (0, N + 1):
        return tuple([0] * N)
    eps = tuple(1 if a in indices else 0 for a in range(1, N + 2))
    return offset_from_epsilon(fundamental_label(N, k), eps)


def build_wedge(N: int, k: int) -> Irrep:
    """Lambda^k(C^{N+1}) on increasing index tuples, basis in canonical weight order."""
    if N < 1:
        raise DomainError(f"rank N must be at least 1, got {N}")
    if not 0 <= k <= N + 1:
        raise DomainError(f"wedge degree k={k} out of range 0..{N + 1}")
    tuples = list(combinations(range(1, N + 2), k))
    tuples.sort(key=lambda t: wedge_offset(N, k, t))
    position = {t: idx for idx, t in enumerate(tuples)}
    dim = len(tuples)

    mats = {}
    for a in range(1, N + 2):
        for b in range(1, N + 2):
            if a == b:
                continue
            rows = [[ZERO] * dim for _ in range(dim)]
            for col, t in enumerate(tuples):
                for sign, image in apply_elementary(a, b, t):
                    rows[position[image]][col] += QQ(sign)
            mats[(a, b)] = matrix(rows, dim)

    return Irrep(
        N=N,
        lam=fundamental_label(N, k),
        basis_weights=tuple(wedge_offset(N, k, t) for t in tuples),
        matE=mats,
        wedge_basis=tuple(tuples),
    )


def wedge_vector(rep: Irrep, coefficients: Dict[WedgeIndices, Scalar]) -> Tuple[Scalar, ...]:
    """Coefficient vector in rep's basis for a sparse wedge expansion."""
    if rep.wedge_basis is None:
        raise DomainError("module is not realised on wedge tuples")
    position = {t: idx for idx, t in enumerate(rep.wedge_basis)}
    values = [ZERO] * rep.dim
    for t, c in coefficients.items():
        sign, ordered = sort_with_sign(t)
        if sign:
            values[position[ordered]] += sign * QQ.convert(c)
    return tuple(values)


def wedge_coefficients(rep: Irrep, values: Sequence[Scalar]) -> Dict[WedgeIndices, Scalar]:
    if rep.wedge_basis is None:
        raise DomainError("module is not realised on wedge tuples")
    return {t: c for t, c in zip(rep.wedge_basis, values) if c}


def wedge_degree(rep: Irrep) -> int:
    if rep.wedge_basis is None:
        raise DomainError("module is not realised on wedge tuples")
    return len(rep.wedge_basis[0])


def wedge_map_matrix(source: Irrep, target: Irrep, vector: Sequence[Scalar]) -> List[List[Scalar]]:
    """Matrix (target.dim x source.dim) of x -> vector ^ x between consecutive wedge powers."""
    if source.wedge_basis is None or target.wedge_basis is None:
        raise DomainError("wedge map needs wedge-realised modules")
    rows = [[ZERO] * source.dim for _ in range(target.dim)]
    position = {t: idx for idx, t in enumerate(target.wedge_basis)}
    for col, t in enumerate(source.wedge_basis):
        for image, c in wedge_with(vector, t).items():
            rows[position[image]][col] += c
    return rows
