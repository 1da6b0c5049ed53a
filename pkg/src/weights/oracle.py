"""Brute-force weight data for V(lambda), independent of any matrix construction.

Multiplicities come from Freudenthal's recursion in exact arithmetic; the
Weyl dimension formula serves as a cross-check.
"""
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Sequence, Tuple
from sympy.polys.domains import QQ
from src.utils.linalg import Scalar
from .root_system import (
    AlphaOffset,
    Interval,
    RootSystemA,
    WeightLabel,
    check_label,
    epsilon_coordinates,
    kappa,
)


def weyl_dimension(lam: Sequence[int]) -> int:
    """dim V(lambda) = prod over positive roots of <lambda+rho, beta> / <rho, beta>."""
    check_label(lam)
    N = len(lam)
    value = QQ.one
    for i, j in RootSystemA(N).positive_roots():
        height = j - i + 1
        value *= QQ(sum(lam[i - 1:j]) + height, height)
    assert value.denominator == 1
    return int(value.numerator)


def _inner(x: Sequence[int], y: Sequence[int]) -> Scalar:
    """Invariant form on epsilon coordinates, projected to the trace-zero hyperplane."""
    n = len(x)
    return QQ(sum(a * b for a, b in zip(x, y))) - QQ(sum(x) * sum(y), n)


def _dominates(top: Sequence[int], low: Sequence[int]) -> bool:
    """Dominance order on epsilon vectors with equal sums."""
    running_top = running_low = 0
    for a, b in zip(top, low):
        running_top += a
        running_low += b
        if running_low > running_top:
            return False
    return running_top == running_low


def is_weight(lam: Sequence[int], offset: Sequence[int]) -> bool:
    """True iff lambda - offset.alpha is a weight of V(lambda)."""
    if any(g < 0 for g in offset):
        return False
    eps = epsilon_coordinates(lam, offset)
    dominant = sorted(eps, reverse=True)
    return _dominates(epsilon_coordinates(lam, [0] * len(lam)), dominant)


@lru_cache(maxsize=256)
def _multiplicities(lam: WeightLabel) -> Tuple[Tuple[AlphaOffset, int], ...]:
    N = len(lam)
    roots = RootSystemA(N).positive_roots()
    lowest = kappa(lam)
    rho = tuple(range(N, -1, -1))
    top = epsilon_coordinates(lam, [0] * N)
    top_norm = _inner([a + b for a, b in zip(top, rho)], [a + b for a, b in zip(top, rho)])

    offsets = sorted(
        (o for o in product(*(range(k + 1) for k in lowest)) if is_weight(lam, o)),
        key=lambda o: (sum(o), o),
    )
    mult: Dict[AlphaOffset, int] = {}
    for offset in offsets:
        if not any(offset):
            mult[offset] = 1
            continue
        eps = epsilon_coordinates(lam, offset)
        shifted = [a + b for a, b in zip(eps, rho)]
        denominator = top_norm - _inner(shifted, shifted)
        numerator = QQ.zero
        for i, j in roots:
            root_eps = [0] * (N + 1)
            root_eps[i - 1] += 1
            root_eps[j] -= 1
            k = 1
            while True:
                higher = tuple(g - k if i <= p + 1 <= j else g for p, g in enumerate(offset))
                if any(g < 0 for g in higher):
                    break
                m = mult.get(higher, 0)
                if m:
                    numerator += 2 * m * _inner(epsilon_coordinates(lam, higher), root_eps)
                k += 1
        value = numerator / denominator
        assert value.denominator == 1
        if value.numerator:
            mult[offset] = int(value.numerator)
    return tuple(sorted(mult.items()))


def enumerate_weights(lam: Sequence[int]) -> Dict[AlphaOffset, int]:
    """Map every weight offset of V(lambda) to its multiplicity."""
    return dict(_multiplicities(check_label(lam)))


def lowest_weight_offset(lam: Sequence[int]) -> AlphaOffset:
    """The weight of largest height found by enumeration."""
    weights = enumerate_weights(lam)
    return max(weights, key=lambda o: (sum(o), o))


def weight_string(weights: Dict[AlphaOffset, int], offset: AlphaOffset, root: Interval) -> Tuple[int, int]:
    """(r, q): the string through gamma along beta runs from gamma - r beta to gamma + q beta."""
    i, j = root

    def step(k: int) -> AlphaOffset:
        return tuple(g - k if i <= p + 1 <= j else g for p, g in enumerate(offset))

    q_up = 0
    while step(q_up + 1) in weights:
        q_up += 1
    r_down = 0
    while step(-(r_down + 1)) in weights:
        r_down += 1
    return r_down, q_up


@dataclass(frozen=True)
class ThetaString:
    top: AlphaOffset
    length: int
    unbroken: bool


@dataclass(frozen=True)
class ThetaCensus:
    strings: Tuple[ThetaString, ...]
    maximal_length: int

    @property
    def maximal_tops(self) -> List[AlphaOffset]:
        return [s.top for s in self.strings if s.length == self.maximal_length]

    @property
    def unique_maximal(self) -> bool:
        return len(self.maximal_tops) == 1


def theta_string_census(lam: Sequence[int]) -> ThetaCensus:
    """Every theta-string of V(lambda), found by walking the enumerated weights."""
    weights = enumerate_weights(lam)
    N = len(lam)
    theta = RootSystemA(N).theta
    strings: List[ThetaString] = []
    for offset in sorted(weights):
        up = tuple(g - 1 for g in offset)
        if up in weights:
            continue
        r_down, _ = weight_string(weights, offset, theta)
        # walk the gamma - k theta chain across the whole kappa box to detect breaks
        present = [
            k for k in range(sum(kappa(lam)) + 1)
            if tuple(g + k for g in offset) in weights
        ]
        unbroken = present == list(range(len(present)))
        strings.append(ThetaString(top=offset, length=r_down + 1, unbroken=unbroken))
    maximal = max(s.length for s in strings)
    return ThetaCensus(strings=tuple(strings), maximal_length=maximal)
