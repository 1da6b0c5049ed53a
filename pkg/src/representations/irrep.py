"""Finite-dimensional sl_{N+1}-modules stored as a weight basis plus E_ij matrices."""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix
from src.utils.errors import DomainError
from src.utils.linalg import Scalar, Vector, ZERO, mat_vec, matrix, same_matrix, zeros
from src.utils.rationals import format_rational, parse_rational
from src.weights import AlphaOffset, WeightLabel, elementary_shift, epsilon_coordinates

Elementary = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class Irrep:
    """An irreducible V(lambda) with an explicit weight basis.

    ``basis_weights`` lists the alpha-offset of each basis vector in canonical
    order (lexicographic on offsets, ties broken by construction order).
    ``matE`` holds the off-diagonal elementary matrices; the diagonal of gl
    acts through the weights.
    """

    N: int
    lam: WeightLabel
    basis_weights: Tuple[AlphaOffset, ...]
    matE: Mapping[Elementary, DomainMatrix] = field(repr=False)
    wedge_basis: Optional[Tuple[Tuple[int, ...], ...]] = field(default=None, repr=False)

    @property
    def dim(self) -> int:
        return len(self.basis_weights)

    @property
    def hw_index(self) -> int:
        return self.basis_weights.index(tuple([0] * self.N))

    @property
    def lw_index(self) -> int:
        return max(range(self.dim), key=lambda idx: (sum(self.basis_weights[idx]), self.basis_weights[idx]))

    def epsilon(self, index: int) -> Tuple[int, ...]:
        return epsilon_coordinates(self.lam, self.basis_weights[index])

    def check_elementary(self, i: int, j: int) -> None:
        if i == j or not (1 <= i <= self.N + 1 and 1 <= j <= self.N + 1):
            raise DomainError(f"invalid elementary matrix index ({i}, {j}) for sl_{self.N + 1}")

    def E(self, i: int, j: int) -> DomainMatrix:
        self.check_elementary(i, j)
        return self.matE[(i, j)]

    def apply(self, i: int, j: int, vec: Sequence[Scalar]) -> Vector:
        return mat_vec(self.E(i, j), vec)

    def apply_power(self, i: int, j: int, power: int, vec: Sequence[Scalar]) -> Vector:
        result = tuple(vec)
        for _ in range(power):
            result = self.apply(i, j, result)
        return result

    def weight_action(self, h: Sequence[Scalar]) -> Vector:
        """Scalars mu(h) by which a traceless diagonal h acts on each basis vector."""
        if len(h) != self.N + 1:
            raise DomainError(f"diagonal of length {len(h)} for sl_{self.N + 1}")
        if sum((QQ.convert(x) for x in h), ZERO):
            raise DomainError("diagonal element is not traceless")
        return tuple(
            sum((QQ(m) * QQ.convert(x) for m, x in zip(self.epsilon(idx), h)), ZERO)
            for idx in range(self.dim)
        )

    def diagonal(self, h: Sequence[Scalar]) -> DomainMatrix:
        values = self.weight_action(h)
        rows = [[values[r] if r == c else ZERO for c in range(self.dim)] for r in range(self.dim)]
        return matrix(rows, self.dim)

    def operator(self, coefficients: Mapping[Elementary, Scalar]) -> DomainMatrix:
        """Matrix of sum c_ab E_ab; the diagonal part must be traceless."""
        result = zeros(self.dim, self.dim)
        h = [ZERO] * (self.N + 1)
        for (a, b), c in coefficients.items():
            c = QQ.convert(c)
            if not c:
                continue
            if a == b:
                if not 1 <= a <= self.N + 1:
                    raise DomainError(f"diagonal index {a} out of range for sl_{self.N + 1}")
                h[a - 1] += c
            else:
                result = result + self.E(a, b) * c
        if any(h):
            result = result + self.diagonal(h)
        return result

    def weight_spaces(self) -> Dict[AlphaOffset, List[int]]:
        spaces: Dict[AlphaOffset, List[int]] = {}
        for idx, offset in enumerate(self.basis_weights):
            spaces.setdefault(offset, []).append(idx)
        return spaces

    def shifted(self, offset: AlphaOffset, i: int, j: int) -> AlphaOffset:
        shift = elementary_shift(self.N, i, j)
        return tuple(g + s for g, s in zip(offset, shift))

    def is_highest_weight_vector(self, vec: Sequence[Scalar]) -> bool:
        return all(
            not any(self.apply(i, j, vec))
            for i in range(1, self.N + 2)
            for j in range(i + 1, self.N + 2)
        )

    def __repr__(self) -> str:
        return f"<Irrep(N={self.N}, lambda={self.lam}, dim={self.dim})>"


def weight_decompose(rep: Irrep, vec: Sequence[Scalar]) -> List[Tuple[AlphaOffset, Vector]]:
    """Split vec into weight components, in canonical weight order, zeros omitted."""
    if len(vec) != rep.dim:
        raise DomainError(f"vector of length {len(vec)} for a module of dim {rep.dim}")
    components = []
    for offset, indices in sorted(rep.weight_spaces().items()):
        if not any(vec[idx] for idx in indices):
            continue
        part = tuple(vec[idx] if idx in indices else ZERO for idx in range(rep.dim))
        components.append((offset, part))
    return components


def weight_component(rep: Irrep, vec: Sequence[Scalar], offset: AlphaOffset) -> Vector:
    for found, part in weight_decompose(rep, vec):
        if found == offset:
            return part
    return tuple([ZERO] * rep.dim)


def commutation_failures(rep: Irrep) -> List[Tuple[int, int, int, int]]:
    """Quadruples (i,j,k,l) where [E_ij, E_kl] != d_jk E_il - d_li E_kj."""
    failures = []
    indices = range(1, rep.N + 2)
    for i in indices:
        for j in indices:
            if i == j:
                continue
            for k in indices:
                for l in indices:
                    if k == l:
                        continue
                    lhs = rep.E(i, j) * rep.E(k, l) - rep.E(k, l) * rep.E(i, j)
                    rhs: Dict[Elementary, Scalar] = {}
                    if j == k:
                        rhs[(i, l)] = rhs.get((i, l), ZERO) + QQ.one
                    if l == i:
                        rhs[(k, j)] = rhs.get((k, j), ZERO) - QQ.one
                    if not same_matrix(lhs, rep.operator(rhs)):
                        failures.append((i, j, k, l))
    return failures


def irrep_to_dict(rep: Irrep) -> Dict[str, Any]:
    """The dump format: sparse rows of [column, "p/q"] pairs per E_ij."""
    mats: Dict[str, List[List[List[Any]]]] = {}
    for (i, j) in sorted(rep.matE):
        rows = []
        for row in rep.matE[(i, j)].to_list():
            rows.append([[col, format_rational(x)] for col, x in enumerate(row) if x])
        mats[f"{i},{j}"] = rows
    return {
        "N": rep.N,
        "lambda": list(rep.lam),
        "dim": rep.dim,
        "weights": [list(w) for w in rep.basis_weights],
        "E": mats,
    }


def irrep_from_dict(data: Mapping[str, Any]) -> Irrep:
    N = int(data["N"])
    dim = int(data["dim"])
    weights = tuple(tuple(int(g) for g in w) for w in data["weights"])
    if len(weights) != dim:
        raise DomainError(f"dump lists {len(weights)} weights for dim {dim}")
    mats = {}
    for key, rows in data["E"].items():
        i, j = (int(part) for part in key.split(","))
        dense = [[ZERO] * dim for _ in range(dim)]
        for r, row in enumerate(rows):
            for col, text in row:
                dense[r][int(col)] = parse_rational(str(text))
        mats[(i, j)] = matrix(dense, dim)
    return Irrep(N=N, lam=tuple(int(c) for c in data["lambda"]), basis_weights=weights, matE=mats)
