"""Exact rational linear algebra on top of sympy's DomainMatrix over QQ.

Vectors are tuples of QQ elements; matrices are ``DomainMatrix`` objects.
"""
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from sympy.external.gmpy import MPQ
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Scalar = MPQ
Vector = Tuple[MPQ, ...]

ZERO = QQ.zero
ONE = QQ.one


def q(numerator: int, denominator: int = 1) -> MPQ:
    return QQ(numerator, denominator)


def vector(values: Iterable[object]) -> Vector:
    """Coerce ints / QQ elements to a QQ vector."""
    return tuple(QQ.convert(v) for v in values)


def zero_vector(dim: int) -> Vector:
    return (ZERO,) * dim


def unit_vector(dim: int, index: int) -> Vector:
    return tuple(ONE if i == index else ZERO for i in range(dim))


def is_zero(vec: Sequence[MPQ]) -> bool:
    return not any(vec)


def add(a: Sequence[MPQ], b: Sequence[MPQ]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence[MPQ], b: Sequence[MPQ]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def scale(c: MPQ, a: Sequence[MPQ]) -> Vector:
    return tuple(c * x for x in a)


def dot(a: Sequence[object], b: Sequence[object]) -> MPQ:
    return sum((QQ.convert(x) * QQ.convert(y) for x, y in zip(a, b)), ZERO)


def matrix(rows: Sequence[Sequence[MPQ]], ncols: int) -> DomainMatrix:
    return DomainMatrix([list(r) for r in rows], (len(rows), ncols), QQ)


def zeros(nrows: int, ncols: int) -> DomainMatrix:
    return DomainMatrix.zeros((nrows, ncols), QQ).to_dense()


def identity(dim: int) -> DomainMatrix:
    return DomainMatrix.eye(dim, QQ).to_dense()


def same_matrix(a: DomainMatrix, b: DomainMatrix) -> bool:
    return a.shape == b.shape and a.to_list() == b.to_list()


def column(vec: Sequence[MPQ]) -> DomainMatrix:
    return DomainMatrix([[x] for x in vec], (len(vec), 1), QQ)


def mat_vec(mat: DomainMatrix, vec: Sequence[MPQ]) -> Vector:
    """Return ``mat @ vec`` as a tuple."""
    if mat.shape[1] == 0:
        return zero_vector(mat.shape[0])
    return tuple(row[0] for row in mat.matmul(column(vec)).to_list())


def entries(mat: DomainMatrix) -> List[List[MPQ]]:
    return mat.to_list()


def trace(mat: DomainMatrix) -> MPQ:
    rows = mat.to_list()
    return sum((rows[i][i] for i in range(min(mat.shape))), ZERO)


def rank(vectors: Sequence[Sequence[MPQ]], dim: int) -> int:
    if not vectors:
        return 0
    return matrix(vectors, dim).rank()


def rref_rows(vectors: Sequence[Sequence[MPQ]], dim: int) -> Tuple[List[Vector], Tuple[int, ...]]:
    """Nonzero rows of the reduced row-echelon form and their pivot columns."""
    if not vectors:
        return [], ()
    reduced, pivots = matrix(vectors, dim).rref()
    rows = [tuple(r) for r in reduced.to_list()[: len(pivots)]]
    return rows, tuple(pivots)


def nullspace_rows(mat: DomainMatrix) -> List[Vector]:
    """Basis of {x : mat @ x = 0} as row tuples."""
    if mat.shape[1] == 0:
        return []
    if mat.shape[0] == 0:
        return [unit_vector(mat.shape[1], i) for i in range(mat.shape[1])]
    basis = mat.nullspace()
    return [tuple(r) for r in basis.to_list() if any(r)]


class RowSpace:
    """A subspace of QQ^dim kept in reduced row-echelon form.

    Rows are stored by pivot column, normalised to 1 at the pivot and zero
    at every other pivot, so a candidate is reduced in one pass.
    ``generators`` remembers the vectors that raised the rank, in insertion
    order.
    """

    def __init__(self, dim: int, vectors: Iterable[Sequence[MPQ]] = ()):
        self.dim = dim
        self.generators: List[Vector] = []
        self._rows: Dict[int, List[MPQ]] = {}
        for v in vectors:
            self.insert(v)

    @property
    def rank(self) -> int:
        return len(self._rows)

    @property
    def is_full(self) -> bool:
        return len(self._rows) == self.dim

    @property
    def pivots(self) -> Tuple[int, ...]:
        return tuple(sorted(self._rows))

    def basis(self) -> List[Vector]:
        """Reduced row-echelon basis, ordered by pivot."""
        return [tuple(self._rows[p]) for p in sorted(self._rows)]

    def reduce(self, vec: Sequence[MPQ]) -> List[MPQ]:
        if len(vec) != self.dim:
            raise ValueError(f"vector of length {len(vec)} used in a space of dim {self.dim}")
        work = list(vec)
        for p, row in self._rows.items():
            c = work[p]
            if c:
                for idx, x in enumerate(row):
                    if x:
                        work[idx] -= c * x
        return work

    def contains(self, vec: Sequence[MPQ]) -> bool:
        return not any(self.reduce(vec))

    def insert(self, vec: Sequence[MPQ]) -> bool:
        """Add ``vec``; return True when the rank grew."""
        if self.is_full:
            if len(vec) != self.dim:
                raise ValueError(f"vector of length {len(vec)} inserted into space of dim {self.dim}")
            return False
        work = self.reduce(vec)
        pivot = next((idx for idx, x in enumerate(work) if x), None)
        if pivot is None:
            return False
        lead = work[pivot]
        work = [x / lead for x in work]
        for row in self._rows.values():
            c = row[pivot]
            if c:
                for idx, x in enumerate(work):
                    if x:
                        row[idx] -= c * x
        self._rows[pivot] = work
        self.generators.append(tuple(vec))
        return True

    def coordinates(self, vec: Sequence[MPQ]) -> Optional[Vector]:
        """Coefficients on ``basis()`` reproducing vec, or None when vec is outside."""
        if not self.contains(vec):
            return None
        return tuple(vec[p] for p in sorted(self._rows))

    def complement(self) -> List[Vector]:
        """Standard basis vectors on the non-pivot columns: coset representatives."""
        return [unit_vector(self.dim, i) for i in range(self.dim) if i not in self._rows]

    def issubspace(self, other: "RowSpace") -> bool:
        return all(other.contains(row) for row in self.basis())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RowSpace):
            return NotImplemented
        return self.dim == other.dim and self.basis() == other.basis()

    def __repr__(self) -> str:
        return f"<RowSpace(dim={self.dim}, rank={self.rank})>"


def apply_rows(rows: Sequence[Sequence[MPQ]], vec: Sequence[MPQ]) -> Vector:
    """Dense matrix-vector product on plain row lists."""
    return tuple(
        sum((x * v for x, v in zip(row, vec) if x and v), ZERO) for row in rows
    )


def solve_left(basis: Sequence[Sequence[MPQ]], target: Sequence[MPQ], dim: int) -> Optional[Vector]:
    """Coefficients c with sum_k c_k * basis[k] == target, or None.

    ``basis`` must be linearly independent.
    """
    if not basis:
        return () if is_zero(target) else None
    mat = matrix(basis, dim)
    _, pivots = mat.rref()
    if len(pivots) != len(basis):
        raise ValueError("solve_left requires an independent basis")
    square = matrix([[row[p] for p in pivots] for row in basis], len(pivots))
    rhs = matrix([[target[p] for p in pivots]], len(pivots))
    coeffs = rhs.matmul(square.inv()).to_list()[0]
    combo = matrix([coeffs], len(basis)).matmul(mat).to_list()[0]
    if tuple(combo) != tuple(target):
        return None
    return tuple(coeffs)
