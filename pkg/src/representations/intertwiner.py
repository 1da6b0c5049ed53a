from typing import List, Tuple
from sympy.polys.matrices import DomainMatrix
from src.utils.errors import VerificationError
from src.utils.linalg import RowSpace, Vector, matrix, same_matrix, unit_vector
from .irrep import Irrep


def _lowering_words(rep: Irrep, start: Vector) -> List[Tuple[Tuple[int, ...], Vector]]:
    """Breadth-first words in E_{i+1,i} whose images of start span the module."""
    space = RowSpace(rep.dim, [start])
    found: List[Tuple[Tuple[int, ...], Vector]] = [((), start)]
    cursor = 0
    while cursor < len(found):
        word, vec = found[cursor]
        for i in range(1, rep.N + 1):
            image = rep.apply(i + 1, i, vec)
            if space.insert(image):
                found.append((word + (i,), image))
        cursor += 1
    return found


def _replay(rep: Irrep, start: Vector, word: Tuple[int, ...]) -> Vector:
    vec = start
    for i in word:
        vec = rep.apply(i + 1, i, vec)
    return vec


def find_intertwiner(source: Irrep, target: Irrep) -> DomainMatrix:
    """An invertible T with T E^source_ij = E^target_ij T for all i != j.

    Highest-weight vectors are matched and the match is propagated along the
    lowering words that build a basis of ``source``.
    """
    if source.N != target.N or source.lam != target.lam or source.dim != target.dim:
        raise VerificationError(f"no isomorphism between {source!r} and {target!r}")
    s_top = unit_vector(source.dim, source.hw_index)
    t_top = unit_vector(target.dim, target.hw_index)
    words = _lowering_words(source, s_top)
    if len(words) != source.dim:
        raise VerificationError(f"highest-weight vector does not generate {source!r}")

    # columns: T maps the source word image to the target word image
    s_cols = matrix([vec for _, vec in words], source.dim).transpose()
    t_cols = matrix([_replay(target, t_top, word) for word, _ in words], target.dim).transpose()
    T = t_cols.matmul(s_cols.inv())

    if T.rank() != target.dim:
        raise VerificationError("intertwiner candidate is singular")
    for (i, j) in source.matE:
        if not same_matrix(T.matmul(source.E(i, j)), target.E(i, j).matmul(T)):
            raise VerificationError(f"intertwiner candidate fails to commute with E_{i}{j}")
    return T


def irreducibility_witness(rep: Irrep, index: int) -> int:
    """Dimension of the span generated from one basis vector under every E_ij."""
    space = RowSpace(rep.dim, [unit_vector(rep.dim, index)])
    frontier = list(space.generators)
    while frontier and not space.is_full:
        vec = frontier.pop(0)
        for (i, j) in sorted(rep.matE):
            image = rep.apply(i, j, vec)
            if space.insert(image):
                frontier.append(image)
    return space.rank
