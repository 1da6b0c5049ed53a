"""Moving v_lambda(n) to v_lambda(m) inside the generated submodule."""
from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple
from src.fields import Degree, VectorField
from src.modules import ModuleSpec, pairing_constant, root_field
from src.utils.errors import DomainError, VerificationError
from src.utils.logger import get_logger
from src.weights import is_minuscule
from .certificates import Certified
from .highest_weight import extract_hw_vector, extract_power, normalize_hw

logger = get_logger(__name__)


@dataclass(frozen=True)
class Translation:
    result: Certified
    steps: Tuple[str, ...] = ()


def _unit(rank: int, index: int) -> Tuple[int, ...]:
    return tuple(1 if a == index else 0 for a in range(1, rank + 2))


def move_first(spec: ModuleSpec, hw: Certified, r: int, steps: List[str]) -> Certified:
    """v_lambda(n) -> v_lambda(n + r e_1)."""
    if r == 0:
        return hw
    last = spec.N + 1
    n = hw.vector.degree
    if pairing_constant(spec, last, n):
        f = root_field(spec, last, 1, r)
        steps.append(f"first: {f}")
        return normalize_hw(spec, hw.act(spec, f))
    # (e_{N+1}|n+sigma) = 0: go through E_{N+1,1}^2 v_lambda(n)
    lowered = extract_power(spec, last, 1, 2, hw)
    down = root_field(spec, last, 1, -r)
    up = root_field(spec, last, 1, 2 * r)
    steps.append(f"first (detour): E_{last},1^2 then {down} then {up}")
    return normalize_hw(spec, lowered.act(spec, down).act(spec, up))


def move_last(spec: ModuleSpec, hw: Certified, s: int, steps: List[str]) -> Certified:
    """v_lambda(n) -> v_lambda(n + s e_{N+1}); needs (e_1|n+sigma) != 0."""
    if s == 0:
        return hw
    n = hw.vector.degree
    if not pairing_constant(spec, 1, n):
        raise VerificationError(f"(e_1|n+sigma) vanishes at {n}")
    f = root_field(spec, 1, spec.N + 1, s)
    # (e_1|n+sigma) v_lambda + s E_{N+1,1} v_lambda
    mixed = hw.act(spec, f)
    extracted = extract_hw_vector(spec, mixed)
    steps.append(f"last: {f}, then {len(extracted.steps)} extraction passes")
    return normalize_hw(spec, extracted.result)


def move_rest(spec: ModuleSpec, hw: Certified, r: Sequence[int], steps: List[str]) -> Certified:
    """v_lambda(n) -> v_lambda(n + r) for r with r_{N+1} = 0; needs (e_{N+1}|n+sigma) != 0."""
    if not any(r):
        return hw
    if r[-1] != 0:
        raise VerificationError(f"shift {tuple(r)} moves the last coordinate")
    n = hw.vector.degree
    if not pairing_constant(spec, spec.N + 1, n):
        raise VerificationError(f"(e_{spec.N + 1}|n+sigma) vanishes at {n}")
    f = VectorField.of(_unit(spec.N, spec.N + 1), r)
    steps.append(f"rest: {f}")
    return normalize_hw(spec, hw.act(spec, f))


def translate_degree(spec: ModuleSpec, hw: Certified, m: Sequence[int]) -> Translation:
    """Certified v_lambda(m) from a certified multiple of v_lambda(n).

    Order of moves: fix (e_1|.) != 0 along e_1, move along e_{N+1}, then
    the remaining coordinates. When the target has (e_{N+1}|m+sigma) = 0 the
    e_{N+1} move goes to a neighbour first and comes back after the other
    coordinates are set.
    """
    if is_minuscule(spec.lam):
        raise DomainError(f"lambda={spec.lam} is minuscule")
    target = spec.check_degree(m)
    current = normalize_hw(spec, hw)
    steps: List[str] = []
    N = spec.N
    degree = current.vector.degree

    if degree != target and not pairing_constant(spec, 1, degree):
        current = move_first(spec, current, 1, steps)
        degree = current.vector.degree

    if degree != target:
        t = target[N] - degree[N]
        pole = -spec.sigma[N] - degree[N]
        degenerate = pole.denominator == 1 and t == pole.numerator
        if not degenerate:
            current = move_last(spec, current, t, steps)
            degree = current.vector.degree
            rest = tuple(a - b for a, b in zip(target, degree))
            current = move_rest(spec, current, rest, steps)
        else:
            detour = t + 1
            current = move_last(spec, current, detour, steps)
            degree = current.vector.degree
            p = target[0] if pairing_constant(spec, 1, target) else target[0] + 1
            staging = (p,) + tuple(target[1:N]) + (degree[N],)
            current = move_rest(spec, current, tuple(a - b for a, b in zip(staging, degree)), steps)
            current = move_last(spec, current, t - detour, steps)
            current = move_first(spec, current, target[0] - p, steps)

    result = normalize_hw(spec, current)
    if result.vector.degree != target:
        raise VerificationError(f"translation ended at {result.vector.degree}, expected {target}")
    logger.debug("translated v_lambda", source=hw.vector.degree, target=target, steps=len(steps))
    return Translation(result, tuple(steps))


def hw_supplier(spec: ModuleSpec, base: Certified) -> Callable[[Degree], Certified]:
    """Memoised m -> certified v_lambda(m), all translated from ``base``."""
    cache = {base.vector.degree: normalize_hw(spec, base)}

    def supply(m: Degree) -> Certified:
        key = tuple(m)
        if key not in cache:
            cache[key] = translate_degree(spec, base, key).result
        return cache[key]

    return supply
