"""The graded action D(u,r).v(n) = (u|n+sigma) v(n+r) + (r u^T) v(n+r)."""
from typing import Dict, List, Optional, Sequence
from sympy.polys.domains import QQ
from src.fields import Degree, FieldSum, VectorField
from src.utils.errors import DomainError
from src.utils.linalg import Scalar, Vector, add, apply_rows, dot, scale
from .graded import GradedVector
from .spec import ModuleSpec


def act_homogeneous(spec: ModuleSpec, f: VectorField, n: Degree, coeffs: Vector) -> Vector:
    """Coefficients of D(u,r).v(n); the result sits at degree n + r."""
    rows = spec.operator_rows(f)
    return add(scale(dot(f.u, spec.shifted(n)), coeffs), apply_rows(rows, coeffs))


def act(spec: ModuleSpec, f: VectorField, w: GradedVector) -> GradedVector:
    if w.dim != spec.dim:
        raise DomainError(f"graded vector of dim {w.dim} in a module of dim {spec.dim}")
    if f.rank != spec.N:
        raise DomainError(f"field of rank {f.rank} acting on a rank {spec.N} module")
    if not f.is_divergence_zero():
        raise DomainError(f"field {f} is not divergence-zero")
    parts: Dict[Degree, Vector] = {}
    for n, coeffs in w.support:
        target = tuple(a + b for a, b in zip(n, f.r))
        image = act_homogeneous(spec, f, n, coeffs)
        parts[target] = add(parts[target], image) if target in parts else image
    return GradedVector.from_mapping(spec.dim, parts)


def act_sum(spec: ModuleSpec, f: FieldSum, w: GradedVector) -> GradedVector:
    result = GradedVector.zero(spec.dim)
    for term in f.fields():
        result = result + act(spec, term, w)
    return result


def act_word(spec: ModuleSpec, word: Sequence[VectorField], w: GradedVector) -> GradedVector:
    """Apply word[0] first, then word[1], and so on."""
    for f in word:
        w = act(spec, f, w)
    return w


def root_field(spec: ModuleSpec, j: int, i: int, multiple: int) -> VectorField:
    """D(e_j, multiple * e_i), divergence-zero for i != j."""
    u = [0] * (spec.N + 1)
    u[j - 1] = 1
    r = [0] * (spec.N + 1)
    r[i - 1] = multiple
    return VectorField.of(u, r)


def product_shifts(k: int) -> Sequence[int]:
    """r = (1, ..., 1, -(k-1)): sums to zero and kills the linear E_ij term."""
    return tuple([1] * (k - 1) + [-(k - 1)])


def product_word(spec: ModuleSpec, i: int, j: int, k: int, shifts: Optional[Sequence[int]] = None) -> List[VectorField]:
    if i == j:
        raise DomainError("operator product needs i != j")
    if k < 2:
        raise DomainError(f"operator product needs k >= 2, got {k}")
    rs = tuple(shifts) if shifts is not None else product_shifts(k)
    if len(rs) != k or sum(rs) != 0 or any(r == 0 for r in rs):
        raise DomainError(f"shifts {rs} must be {k} nonzero integers summing to zero")
    # D(e_j, r_1 e_i) ... D(e_j, r_k e_i): the rightmost factor acts first
    return [root_field(spec, j, i, r) for r in reversed(rs)]


def operator_product_trick(
    spec: ModuleSpec,
    i: int,
    j: int,
    k: int,
    w: GradedVector,
    shifts: Optional[Sequence[int]] = None,
) -> GradedVector:
    """D(e_j, r_1 e_i) ... D(e_j, r_k e_i).w for homogeneous w.

    With K_0 = (e_j|n+sigma) the product equals prod_p (K_0 + r_p E_ij) v(n),
    so the coefficient of E_ij^m is K_0^{k-m} e_m(r).
    """
    if not w.is_homogeneous():
        raise DomainError("operator product expects a homogeneous vector")
    return act_word(spec, product_word(spec, i, j, k, shifts), w)


def elementary_symmetric(values: Sequence[int], m: int) -> int:
    table = [1] + [0] * m
    for x in values:
        for p in range(m, 0, -1):
            table[p] += table[p - 1] * x
    return table[m]


def pairing_constant(spec: ModuleSpec, j: int, n: Sequence[int]) -> Scalar:
    """K_0 = (e_j | n + sigma)."""
    return spec.shifted(n)[j - 1]


def expected_product(spec: ModuleSpec, i: int, j: int, shifts: Sequence[int], w: GradedVector) -> GradedVector:
    """sum_m K_0^{k-m} e_m(r) E_ij^m v(n), the closed form of the operator product."""
    n = w.degree
    k0 = pairing_constant(spec, j, n)
    total = None
    power = w.coefficients
    for m in range(len(shifts) + 1):
        term = scale(QQ(elementary_symmetric(shifts, m)) * k0 ** (len(shifts) - m), power)
        total = term if total is None else add(total, term)
        power = spec.rep.apply(i, j, power)
    return GradedVector.homogeneous(spec.dim, n, total)
