"""Root and weight combinatorics for type A_N.

A weight of V(lambda) is stored as its alpha-offset from lambda: the tuple
(g_1, ..., g_N) with gamma = lambda - sum g_i alpha_i. Positive roots are
intervals (i, j) meaning alpha_i + ... + alpha_j with 1 <= i <= j <= N.
"""
from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, List, Sequence, Tuple
from src.utils.errors import ConfigError, DomainError
from src.utils.rationals import parse_int_list

WeightLabel = Tuple[int, ...]
AlphaOffset = Tuple[int, ...]
Interval = Tuple[int, int]


@dataclass(frozen=True)
class RootSystemA:
    N: int

    def __post_init__(self) -> None:
        if self.N < 1:
            raise DomainError(f"rank N must be at least 1, got {self.N}")

    @property
    def theta(self) -> Interval:
        return (1, self.N)

    def positive_roots(self) -> List[Interval]:
        return [(i, j) for i in range(1, self.N + 1) for j in range(i, self.N + 1)]

    def cartan_matrix(self) -> List[List[int]]:
        return [
            [2 if a == b else (-1 if abs(a - b) == 1 else 0) for b in range(self.N)]
            for a in range(self.N)
        ]

    def check_interval(self, root: Interval) -> None:
        i, j = root
        if not 1 <= i <= j <= self.N:
            raise DomainError(f"root interval {root} out of range for A_{self.N}")

    def root_offset(self, root: Interval) -> AlphaOffset:
        """alpha-coordinates of the root alpha_i + ... + alpha_j."""
        self.check_interval(root)
        i, j = root
        return tuple(1 if i <= p + 1 <= j else 0 for p in range(self.N))


@dataclass(frozen=True)
class Weight:
    """A weight of V(lambda): its alpha-offset from lambda together with lambda."""

    lam: WeightLabel
    offset: AlphaOffset

    @property
    def label(self) -> WeightLabel:
        return label_of(self.lam, self.offset)


def check_label(lam: Sequence[int], N: int | None = None) -> WeightLabel:
    if N is not None and len(lam) != N:
        raise DomainError(f"label {tuple(lam)} has {len(lam)} entries, expected N={N}")
    if not lam:
        raise DomainError("empty weight label")
    if any(c < 0 for c in lam):
        raise DomainError(f"highest weight label must be nonnegative: {tuple(lam)}")
    return tuple(lam)


def parse_label(text: str, N: int | None = None) -> WeightLabel:
    """Parse a comma-separated label such as "1,0,2"."""
    values = parse_int_list(text)
    try:
        return check_label(values, N)
    except DomainError as exc:
        raise ConfigError(str(exc)) from exc


def label_of(lam: Sequence[int], offset: Sequence[int]) -> WeightLabel:
    """label(gamma) = label(lambda) - CartanMatrix . offset."""
    n = len(lam)
    return tuple(
        lam[a] - 2 * offset[a]
        + (offset[a - 1] if a > 0 else 0)
        + (offset[a + 1] if a + 1 < n else 0)
        for a in range(n)
    )


def pairing(gamma: Sequence[int], root: Interval) -> int:
    """<gamma, alpha_i + ... + alpha_j> for a weight given by its label."""
    RootSystemA(len(gamma)).check_interval(root)
    i, j = root
    return sum(gamma[i - 1:j])


def reflect(lam: Sequence[int], offset: Sequence[int], root: Interval) -> AlphaOffset:
    """Reflection of gamma = lambda - offset.alpha through the root; returned as an offset."""
    p = pairing(label_of(lam, offset), root)
    i, j = root
    return tuple(g + p if i <= k + 1 <= j else g for k, g in enumerate(offset))


def kappa(lam: Sequence[int]) -> AlphaOffset:
    """alpha-offset of the lowest weight of V(lambda)."""
    check_label(lam)
    N = len(lam)
    result = [0] * N
    running = 0
    for j in range(1, (N + 1) // 2 + 1):
        running += sum(lam[j - 1:N + 1 - j])
        result[j - 1] = running
        result[N - j] = running
    return tuple(result)


def lowest_weight_by_reflections(lam: Sequence[int]) -> List[AlphaOffset]:
    """Offsets lambda_0, lambda_1, ... from applying (1+p, N+1-p) one at a time.

    Transpositions that are the identity (p = N/2 for even N) are skipped.
    """
    check_label(lam)
    N = len(lam)
    chain: List[AlphaOffset] = [tuple([0] * N)]
    for p in range(N // 2 + 1):
        i, j = 1 + p, N - p
        if i > j:
            continue
        chain.append(reflect(lam, chain[-1], (i, j)))
    return chain


@dataclass(frozen=True)
class ThetaStringData:
    length: int

    def admits(self, offset: Sequence[int]) -> bool:
        """True when the offset may be the top of a maximal theta-string."""
        return offset[0] == 0 and offset[-1] == 0


def theta_string_data(lam: Sequence[int]) -> ThetaStringData:
    check_label(lam)
    return ThetaStringData(length=1 + sum(lam))


def is_minuscule(lam: Sequence[int]) -> bool:
    nonzero = [c for c in lam if c != 0]
    return not nonzero or (len(nonzero) == 1 and nonzero[0] == 1)


class LabelCase(Enum):
    FIRST = "first"     # (C_1..C_{N-1}) non-minuscule
    LAST = "last"       # (C_2..C_N) non-minuscule
    ENDS = "ends"       # C_1 = C_N = 1, zeros between


def label_case(lam: Sequence[int]) -> FrozenSet[LabelCase]:
    """Which of the three non-minuscule situations holds (N >= 2)."""
    check_label(lam)
    N = len(lam)
    if N < 2 or is_minuscule(lam):
        raise DomainError(f"label_case needs a non-minuscule label with N >= 2, got {tuple(lam)}")
    cases = set()
    if not is_minuscule(lam[:-1]):
        cases.add(LabelCase.FIRST)
    if not is_minuscule(lam[1:]):
        cases.add(LabelCase.LAST)
    if lam[0] == 1 and lam[-1] == 1 and not any(lam[1:-1]):
        cases.add(LabelCase.ENDS)
    return frozenset(cases)


def epsilon_coordinates(lam: Sequence[int], offset: Sequence[int]) -> Tuple[int, ...]:
    """Integer vector m in Z^{N+1} with gamma(h) = sum m_i h_i on traceless diagonal h."""
    N = len(lam)
    m = [sum(lam[i:]) for i in range(N)] + [0]
    for i, g in enumerate(offset):
        m[i] -= g
        m[i + 1] += g
    return tuple(m)


def offset_from_epsilon(lam: Sequence[int], eps: Sequence[int]) -> AlphaOffset:
    """Inverse of epsilon_coordinates for vectors with the same coordinate sum."""
    top = epsilon_coordinates(lam, [0] * len(lam))
    if sum(eps) != sum(top):
        raise DomainError(f"epsilon vector {tuple(eps)} not in the weight class of {tuple(lam)}")
    diff = [e - t for e, t in zip(eps, top)]
    result = []
    running = 0
    for d in diff[:-1]:
        running += d
        result.append(-running)
    return tuple(result)


def elementary_shift(N: int, i: int, j: int) -> Tuple[int, ...]:
    """Change in alpha-offset caused by E_ij (weight moves by eps_i - eps_j)."""
    if i == j or not (1 <= i <= N + 1 and 1 <= j <= N + 1):
        raise DomainError(f"invalid elementary matrix index ({i}, {j}) for sl_{N + 1}")
    lo, hi = min(i, j), max(i, j)
    step = -1 if i < j else 1
    return tuple(step if lo <= p + 1 <= hi - 1 else 0 for p in range(N))
