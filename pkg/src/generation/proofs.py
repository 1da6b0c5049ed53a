"""End-to-end constructive replays: one seed in, certified fibers out."""
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple
from src.fields import Degree
from src.modules import GradedSubspace, GradedVector, ModuleSpec, WedgeSubmodule, psi, psi_target
from src.utils.errors import DomainError, VerificationError
from src.utils.logger import get_logger
from .certificates import Certificate, Certified, KnownChecks, count_replay, homogeneous_parts, replay_all
from .fill import fill_from_hw
from .highest_weight import extract_hw_component, extract_hw_vector
from .translation import hw_supplier
from .wedge_reduction import (
    spread_pure_wedge,
    tilde_checks,
    translate_top_wedge,
    translate_w1,
    wedge_weight_vector,
)

logger = get_logger(__name__)


@dataclass
class ProofReplay:
    spec: ModuleSpec
    seed: GradedVector
    subspace: GradedSubspace
    steps: List[str] = field(default_factory=list)
    certified: int = 0
    replay_ok: bool = False

    def ranks(self, degrees: Sequence[Degree]) -> Dict[Degree, int]:
        return self.subspace.ranks(degrees)


def _first_part(spec: ModuleSpec, seed: GradedVector) -> Certified:
    if seed.is_zero():
        raise DomainError("cannot generate from the zero vector")
    return homogeneous_parts(spec, Certified(seed, Certificate.from_seed(0)))[0]


def _replay(
    spec: ModuleSpec,
    seed: GradedVector,
    items: Sequence[Certified],
    known: Optional[KnownChecks] = None,
) -> bool:
    vectors = replay_all(spec, [item.certificate for item in items], [seed], known)
    ok = True
    for got, item in zip(vectors, items):
        match = got == item.vector
        count_replay(match)
        ok = ok and match
    return ok


def replay_non_minuscule(spec: ModuleSpec, seed: GradedVector, degrees: Sequence[Degree]) -> ProofReplay:
    """Highest-weight extraction, translation and lowering from a single seed.

    Every fiber in ``degrees`` ends up with a certified basis; all
    certificates are replayed from the seed in one pass.
    """
    start = _first_part(spec, seed)
    component = extract_hw_component(spec, start)
    top = extract_hw_vector(spec, component.result)
    filled = fill_from_hw(spec, hw_supplier(spec, top.result), degrees)

    items = [item for basis in filled.certificates.values() for item in basis]
    run = ProofReplay(spec, seed, filled.subspace, list(component.steps) + list(top.steps))
    run.certified = len(items)
    run.replay_ok = _replay(spec, seed, items)
    logger.info("constructive replay finished", module=repr(spec), degrees=len(degrees), certified=run.certified)
    return run


def _part_outside(spec: ModuleSpec, seed: GradedVector, tilde: WedgeSubmodule) -> Certified:
    if seed.is_zero():
        raise DomainError("cannot generate from the zero vector")
    for part in homogeneous_parts(spec, Certified(seed, Certificate.from_seed(0))):
        if not tilde.contains(part.vector):
            return part
    raise DomainError("the seed lies in W~; it generates nothing outside W~")


def _pulled_back(spec: ModuleSpec, seed: GradedVector, start: Certified, degrees: Sequence[Degree]) -> List[Certified]:
    """k = 0: translate psi_0(start) inside W_1, then replay the same words on F^sigma(omega_0).

    psi_0 is a module map and injective off -sigma, so each word lands on a
    nonzero multiple of 1(m).
    """
    image_spec = psi_target(spec)
    image = Certified(psi(spec, start.vector, image_spec), start.certificate)
    items = []
    for m in degrees:
        if not any(spec.shifted(m)):
            continue
        moved = translate_w1(image_spec, image, m)
        vector = moved.certificate.replay(spec, [seed])
        if not vector.is_homogeneous() or vector.degree != tuple(m):
            raise VerificationError(f"pulled-back translation missed {tuple(m)}")
        items.append(Certified(vector, moved.certificate))
    return items


def _spread(spec: ModuleSpec, start: Certified, degrees: Sequence[Degree], k: int) -> Tuple[List[Certified], List[str]]:
    reduction = wedge_weight_vector(spec, start)
    targets: List[Tuple[Tuple[int, ...], Degree]] = [
        (indices, tuple(m)) for m in degrees for indices in combinations(range(1, spec.N + 2), k)
    ]
    spread = spread_pure_wedge(spec, reduction.result, targets)
    rounds = list(reduction.rounds) + [f"x={reduction.x}, y={reduction.y}"]
    return list(spread.values()), rounds


def replay_minuscule(spec: ModuleSpec, seed: GradedVector, degrees: Sequence[Degree]) -> ProofReplay:
    """Certified fibers of F^sigma(omega_k) modulo W~_k from a seed outside W~_k.

    1 <= k <= N-1 runs wedge reduction and index spreading, k = N translates
    the top wedges e^_a and k = 0 goes through psi_0 into W_1. The result
    holds W~_k together with every certified vector, so its fibers are full
    exactly when the seed generates the module modulo W~_k.
    """
    k = spec.wedge_degree
    if k is None:
        raise DomainError(f"{spec!r} is not a wedge module F^sigma(omega_k)")
    if k > spec.N:
        raise DomainError(f"F^sigma(omega_{k}) equals W~_{k}; nothing to generate")
    tilde = WedgeSubmodule(spec, tilde=True)
    start = _part_outside(spec, seed, tilde)

    steps: List[str] = []
    if k == 0:
        items = _pulled_back(spec, seed, start, degrees)
    elif k == spec.N:
        items = [translate_top_wedge(spec, start, m) for m in degrees if any(spec.shifted(m))]
    else:
        items, steps = _spread(spec, start, degrees, k)

    subspace = GradedSubspace(spec.dim)
    for m in degrees:
        for row in tilde.piece(m).basis():
            subspace.piece(m).insert(row)
    for item in items:
        subspace.insert(item.vector)

    run = ProofReplay(spec, seed, subspace, steps)
    run.certified = len(items)
    run.replay_ok = _replay(spec, seed, items, tilde_checks(spec))
    logger.info("constructive replay finished", module=repr(spec), k=k, certified=run.certified)
    return run
