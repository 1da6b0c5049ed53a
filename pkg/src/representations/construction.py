"""V(lambda) as the submodule of a tensor product of wedges generated by v_lambda.

v_lambda is the tensor of the wedge highest-weight vectors inside
(x)_k (Lambda^k C^{N+1})^{(x) C_k}; lowering operators E_{i+1,i} grow a weight
basis breadth-first and every E_ij is then solved in that basis.
"""
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
from sympy.polys.domains import QQ
from src.config import settings
from src.utils import IRREP_DURATION, IRREPS_BUILT, get_logger, track_time
from src.utils.errors import BoundExceededError, ConstructionError, DomainError
from src.utils.linalg import Scalar, Vector, ZERO, matrix
from src.weights import AlphaOffset, check_label, elementary_shift, weyl_dimension
from .irrep import Irrep
from .wedge import WedgeIndices, apply_elementary

logger = get_logger(__name__)

TensorKey = Tuple[WedgeIndices, ...]
SparseVector = Dict[TensorKey, Scalar]


def check_bounds(N: int, lam: Sequence[int]) -> None:
    check_label(lam, N)
    if N > settings.max_rank:
        raise BoundExceededError(f"N={N} exceeds max_rank={settings.max_rank}")
    if sum(lam) > settings.max_label_sum:
        raise BoundExceededError(
            f"label sum {sum(lam)} exceeds max_label_sum={settings.max_label_sum}"
        )
    dim = weyl_dimension(lam)
    if dim > settings.max_irrep_dim:
        raise BoundExceededError(f"dim V(lambda)={dim} exceeds max_irrep_dim={settings.max_irrep_dim}")


def apply_to_tensor(a: int, b: int, vec: SparseVector) -> SparseVector:
    """E_ab on a pure-tensor expansion, Leibniz rule over the factors."""
    out: SparseVector = {}
    for key, coeff in vec.items():
        for f, factor in enumerate(key):
            for sign, image in apply_elementary(a, b, factor):
                new = key[:f] + (image,) + key[f + 1:]
                out[new] = out.get(new, ZERO) + sign * coeff
    return {k: v for k, v in out.items() if v}


class _WeightSpace:
    """Independent tensor vectors sharing one weight, in insertion order."""

    def __init__(self) -> None:
        self.vectors: List[SparseVector] = []
        self.indices: List[int] = []
        self._keys: List[TensorKey] = []
        self._pivots: Tuple[int, ...] = ()
        self._inverse = None

    def _rows(self, vectors: Sequence[SparseVector], keys: Sequence[TensorKey]) -> List[List[Scalar]]:
        return [[v.get(k, ZERO) for k in keys] for v in vectors]

    def accepts(self, candidate: SparseVector) -> bool:
        keys = sorted(set(candidate).union(*(v.keys() for v in self.vectors)))
        rows = self._rows(self.vectors + [candidate], keys)
        return matrix(rows, len(keys)).rank() > len(self.vectors)

    def add(self, vec: SparseVector, index: int) -> None:
        self.vectors.append(vec)
        self.indices.append(index)

    def freeze(self) -> None:
        self._keys = sorted(set().union(*(v.keys() for v in self.vectors)))
        rows = matrix(self._rows(self.vectors, self._keys), len(self._keys))
        _, pivots = rows.rref()
        self._pivots = tuple(pivots)
        square = [[row[p] for p in self._pivots] for row in self._rows(self.vectors, self._keys)]
        self._inverse = matrix(square, len(self._pivots)).inv()

    def solve(self, target: SparseVector) -> Optional[Vector]:
        """Coordinates of target in this space's vectors, None if outside."""
        known = set(self._keys)
        if any(k not in known for k in target):
            return None
        rhs = matrix([[target.get(self._keys[p], ZERO) for p in self._pivots]], len(self._pivots))
        coeffs = rhs.matmul(self._inverse).to_list()[0]
        rebuilt: SparseVector = {}
        for c, vec in zip(coeffs, self.vectors):
            for k, x in vec.items():
                rebuilt[k] = rebuilt.get(k, ZERO) + c * x
        if {k: v for k, v in rebuilt.items() if v} != target:
            return None
        return tuple(coeffs)


def _highest_weight_tensor(lam: Sequence[int]) -> SparseVector:
    factors: List[WedgeIndices] = []
    for k, multiplicity in enumerate(lam, start=1):
        factors.extend([tuple(range(1, k + 1))] * multiplicity)
    return {tuple(factors): QQ.one}


@lru_cache(maxsize=64)
def _build(N: int, lam: Tuple[int, ...]) -> Irrep:
    expected = weyl_dimension(lam)
    vectors: List[SparseVector] = [_highest_weight_tensor(lam)]
    offsets: List[AlphaOffset] = [tuple([0] * N)]
    spaces: Dict[AlphaOffset, _WeightSpace] = {offsets[0]: _WeightSpace()}
    spaces[offsets[0]].add(vectors[0], 0)

    cursor = 0
    while cursor < len(vectors):
        for i in range(1, N + 1):
            image = apply_to_tensor(i + 1, i, vectors[cursor])
            if not image:
                continue
            target = tuple(g + (1 if p == i - 1 else 0) for p, g in enumerate(offsets[cursor]))
            space = spaces.setdefault(target, _WeightSpace())
            if space.accepts(image):
                space.add(image, len(vectors))
                vectors.append(image)
                offsets.append(target)
        cursor += 1
        if len(vectors) > expected:
            raise ConstructionError(f"lowering closure for {lam} exceeded the Weyl dimension {expected}")

    if len(vectors) != expected:
        raise ConstructionError(
            f"constructed dim {len(vectors)} for lambda={lam}, Weyl dimension is {expected}"
        )

    order = sorted(range(len(vectors)), key=lambda idx: (offsets[idx], idx))
    position = {old: new for new, old in enumerate(order)}
    for space in spaces.values():
        space.freeze()

    dim = len(vectors)
    mats = {}
    for a in range(1, N + 2):
        for b in range(1, N + 2):
            if a == b:
                continue
            shift = elementary_shift(N, a, b)
            rows = [[ZERO] * dim for _ in range(dim)]
            for old in range(dim):
                image = apply_to_tensor(a, b, vectors[old])
                if not image:
                    continue
                target = tuple(g + s for g, s in zip(offsets[old], shift))
                space = spaces.get(target)
                coords = space.solve(image) if space is not None else None
                if coords is None:
                    raise ConstructionError(
                        f"E_{a}{b} image of basis vector {old} not in weight space {target}"
                    )
                for c, idx in zip(coords, space.indices):
                    rows[position[idx]][position[old]] = c
            mats[(a, b)] = matrix(rows, dim)

    return Irrep(
        N=N,
        lam=lam,
        basis_weights=tuple(offsets[idx] for idx in order),
        matE=mats,
    )


@track_time(IRREP_DURATION, kind="tensor")
def build_irrep(N: int, lam: Sequence[int]) -> Irrep:
    """Exact V(lambda) for sl_{N+1}; bounded by the configured desk-scale limits."""
    if N < 1:
        raise DomainError(f"rank N must be at least 1, got {N}")
    label = tuple(int(c) for c in lam)
    check_bounds(N, label)
    cached = _build.cache_info().currsize
    rep = _build(N, label)
    if _build.cache_info().currsize > cached:
        if settings.enable_metrics:
            IRREPS_BUILT.labels(kind="tensor").inc()
        logger.debug("Built irreducible module", N=N, label=label, dim=rep.dim)
    return rep
