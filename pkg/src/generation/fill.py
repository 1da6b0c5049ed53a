"""Full fibers V(lambda) (x) q^m from the vectors v_lambda(m)."""
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Tuple
from src.fields import Degree
from src.modules import GradedSubspace, GradedVector, ModuleSpec, pairing_constant, root_field
from src.representations import Irrep
from src.utils.errors import VerificationError
from src.utils.linalg import RowSpace, Vector, unit_vector
from src.utils.logger import get_logger
from .certificates import Certified

logger = get_logger(__name__)

LoweringWord = Tuple[int, ...]


def lowering_words(rep: Irrep) -> List[Tuple[LoweringWord, Vector]]:
    """Words in the simple lowering operators spanning V(lambda) from v_lambda.

    A word (p_1, ..., p_t) means E_{p_1+1,p_1} first, then E_{p_2+1,p_2} and so on.
    The list is prefix-closed.
    """
    top = unit_vector(rep.dim, rep.hw_index)
    space = RowSpace(rep.dim, [top])
    words: List[Tuple[LoweringWord, Vector]] = [((), top)]
    queue = deque(words)
    while queue:
        word, vec = queue.popleft()
        for p in range(1, rep.N + 1):
            image = rep.apply(p + 1, p, vec)
            if space.insert(image):
                words.append((word + (p,), image))
                queue.append((word + (p,), image))
    if space.rank != rep.dim:
        raise VerificationError(f"lowering words span rank {space.rank} of {rep.dim}")
    return words


@dataclass
class FillResult:
    subspace: GradedSubspace
    certificates: Dict[Degree, List[Certified]] = field(default_factory=dict)

    def ranks(self) -> Dict[Degree, int]:
        return {n: self.subspace.rank(n) for n in self.certificates}


def fill_from_hw(
    spec: ModuleSpec,
    hw_at: Callable[[Degree], Certified],
    degrees: Iterable[Degree],
) -> FillResult:
    """Certified bases of every fiber in ``degrees``.

    For i > j, D(e_j, e_i) applied to y v_lambda(m - e_i) gives
    (e_j|m-e_i+sigma) y v_lambda(m) + E_ij y v_lambda(m), so each lowering
    step needs the shorter word at m - e_i and at m.
    """
    words = lowering_words(spec.rep)
    memo: Dict[Tuple[LoweringWord, Degree], Certified] = {}

    def build(word: LoweringWord, m: Degree) -> Certified:
        # iterative over prefixes: shorter words first
        pending = [(word, m)]
        while pending:
            w, n = pending[-1]
            if (w, n) in memo:
                pending.pop()
                continue
            if not w:
                memo[(w, n)] = hw_at(n)
                pending.pop()
                continue
            p = w[-1]
            prefix = w[:-1]
            source = tuple(a - (1 if idx == p else 0) for idx, a in enumerate(n))
            missing = [key for key in ((prefix, source), (prefix, n)) if key not in memo]
            if missing:
                pending.extend(missing)
                continue
            f = root_field(spec, p, p + 1, 1)
            k = pairing_constant(spec, p, source)
            memo[(w, n)] = memo[(prefix, source)].act(spec, f) - memo[(prefix, n)].scaled(k)
            pending.pop()
        return memo[(word, m)]

    result = FillResult(GradedSubspace(spec.dim))
    for m in degrees:
        key = spec.check_degree(m)
        basis = []
        for word, expected in words:
            item = build(word, key)
            if item.vector != GradedVector.homogeneous(spec.dim, key, expected):
                raise VerificationError(f"lowering word {word} did not reproduce its vector at {key}")
            result.subspace.insert(item.vector)
            basis.append(item)
        result.certificates[key] = basis
        if result.subspace.rank(key) != spec.dim:
            raise VerificationError(f"fiber at {key} reached rank {result.subspace.rank(key)} of {spec.dim}")
    logger.debug("fibers filled", degrees=len(result.certificates), dim=spec.dim)
    return result
