"""Constructive steps for the minuscule modules F^sigma(omega_k).

Everything here works modulo W~_k^sigma: vectors of W~ enter certificates as
``known`` leaves labelled ``W~``, checked on replay by :func:`tilde_checks`.
"""
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple
from sympy.polys.domains import QQ
from src.fields import Degree, VectorField
from src.modules import GradedVector, ModuleSpec, WedgeSubmodule, pairing_constant, root_field
from src.representations import apply_elementary, sort_with_sign, wedge_coefficients, wedge_vector
from src.utils.errors import DomainError, VerificationError
from src.utils.linalg import Scalar, ZERO
from src.utils.logger import get_logger
from .certificates import Certified, KnownChecks

logger = get_logger(__name__)

TILDE = "W~"
WedgeIndices = Tuple[int, ...]


def tilde_checks(spec: ModuleSpec) -> KnownChecks:
    return {TILDE: WedgeSubmodule(spec, tilde=True).contains}


def _wedge_degree(spec: ModuleSpec) -> int:
    k = spec.wedge_degree
    if k is None:
        raise DomainError(f"{spec!r} is not a wedge module F^sigma(omega_k)")
    return k


def _unit(spec: ModuleSpec, index: int, scale: int = 1) -> Tuple[int, ...]:
    return tuple(scale if a == index else 0 for a in range(1, spec.N + 2))


def _combo(spec: ModuleSpec, pairs: Sequence[Tuple[int, int]]) -> Tuple[int, ...]:
    """sum c e_a over (a, c) pairs."""
    out = [0] * (spec.N + 1)
    for a, c in pairs:
        out[a - 1] += c
    return tuple(out)


def _k(spec: ModuleSpec, a: int, n: Sequence[int]) -> Scalar:
    return pairing_constant(spec, a, n)


def pure_wedge(spec: ModuleSpec, vector: GradedVector) -> Optional[Tuple[WedgeIndices, Scalar]]:
    """(indices, c) when vector == c e_I(n), otherwise None."""
    if not vector.is_homogeneous():
        return None
    coeffs = wedge_coefficients(spec.rep, vector.coefficients)
    if len(coeffs) != 1:
        return None
    return next(iter(coeffs.items()))


def basis_wedge(spec: ModuleSpec, indices: WedgeIndices, n: Sequence[int]) -> GradedVector:
    return GradedVector.homogeneous(spec.dim, n, wedge_vector(spec.rep, {tuple(indices): QQ(1)}))


@dataclass(frozen=True)
class WedgeReduction:
    result: Certified
    indices: WedgeIndices
    x: int
    y: int
    rounds: Tuple[str, ...]


def wedge_weight_vector(spec: ModuleSpec, w: Certified) -> WedgeReduction:
    """A multiple of a basis wedge e_y ^ e_{i_1} ^ ... ^ e_{i_{k-1}}(n) from w.

    x is the first index with (e_x|n+sigma) != 0. Writing every e_x through
    n+sigma splits w into a part free of e_x and a part (n+sigma) ^ z in W.
    Each round D(e_x, -e_y) D(e_i, e_y) - (e_x|n+sigma)(e_i|n+sigma) then
    multiplies by (e_x|n+sigma) E_{y,i}.
    """
    k = _wedge_degree(spec)
    N = spec.N
    if N < 2 or not 1 <= k <= N - 1:
        raise DomainError(f"wedge_weight_vector needs N >= 2 and 1 <= k <= N-1, got N={N}, k={k}")
    if not w.vector.is_homogeneous():
        raise DomainError("expected a nonzero homogeneous vector")
    n = w.vector.degree
    s = spec.shifted(n)
    x = next((a for a in range(1, N + 2) if s[a - 1]), None)
    if x is None:
        raise DomainError(f"n+sigma vanishes at {n}")

    reduced: Dict[WedgeIndices, Scalar] = {}
    for indices, c in wedge_coefficients(spec.rep, w.vector.coefficients).items():
        if x not in indices:
            reduced[indices] = reduced.get(indices, ZERO) + c
            continue
        p = indices.index(x)
        rest = indices[:p] + indices[p + 1:]
        sign = -1 if p % 2 else 1
        for b in range(1, N + 2):
            if b == x or not s[b - 1]:
                continue
            b_sign, ordered = sort_with_sign((b,) + rest)
            if b_sign:
                reduced[ordered] = reduced.get(ordered, ZERO) - c * sign * b_sign * s[b - 1] / s[x - 1]
    reduced = {key: c for key, c in reduced.items() if c}
    if not reduced:
        raise DomainError(f"the class of w modulo W~ vanishes at {n}")

    target = GradedVector.homogeneous(spec.dim, n, wedge_vector(spec.rep, reduced))
    current = w
    correction = w.vector - target
    if not correction.is_zero():
        current = w - Certified.from_known(correction, TILDE)

    chosen = min(reduced)
    y = min(a for a in range(1, N + 2) if a != x and a not in chosen)
    pairs = [(y, chosen[0])] + [(chosen[t - 1], chosen[t]) for t in range(1, k)]
    rounds: List[str] = []
    for lead, index in pairs:
        first = root_field(spec, index, lead, 1)
        second = root_field(spec, x, lead, -1)
        current = current.act(spec, first).act(spec, second) - current.scaled(s[x - 1] * s[index - 1])
        rounds.append(f"{second} {first} - ({s[x - 1]})({s[index - 1]})")

    found = pure_wedge(spec, current.vector)
    expected = sort_with_sign((y,) + chosen[:-1])[1]
    if found is None or found[0] != expected:
        raise VerificationError(f"reduction rounds did not isolate e_{expected} at {n}")
    logger.debug("pure wedge isolated", degree=n, x=x, y=y, indices=expected)
    return WedgeReduction(current, expected, x, y, tuple(rounds))


def _flat(spec: ModuleSpec, item: Certified, c: int, q: Sequence[int], steps: List[str]) -> Certified:
    """D(e_c, q - p) from degree p; needs (q - p)_c = 0 and (e_c|p+sigma) != 0."""
    p = item.vector.degree
    r = tuple(b - a for a, b in zip(p, q))
    if not any(r):
        return item
    if r[c - 1] != 0 or not _k(spec, c, p):
        raise VerificationError(f"flat move along e_{c} from {p} to {tuple(q)} is not available")
    f = VectorField.of(_unit(spec, c), r)
    steps.append(str(f))
    return item.act(spec, f)


def _cross(
    spec: ModuleSpec,
    item: Certified,
    c: int,
    a: int,
    m: Degree,
    steps: List[str],
) -> Certified:
    """Change coordinate c by landing at m through D(e_c -+ e_a, r(e_c +- e_a)).

    The two coefficients are (e_c|m+sigma) -+ (e_a|m+sigma); one of them is
    nonzero whenever (e_c|m+sigma) != 0.
    """
    p = item.vector.degree
    r = m[c - 1] - p[c - 1]
    if _k(spec, c, m) - _k(spec, a, m):
        helper = tuple(v - (r if idx + 1 in (c, a) else 0) for idx, v in enumerate(m))
        f = VectorField.of(_combo(spec, [(c, 1), (a, -1)]), _combo(spec, [(c, r), (a, r)]))
    else:
        helper = tuple(v - (r if idx + 1 == c else 0) + (r if idx + 1 == a else 0) for idx, v in enumerate(m))
        f = VectorField.of(_combo(spec, [(c, 1), (a, 1)]), _combo(spec, [(c, r), (a, -r)]))
    item = _flat(spec, item, c, helper, steps)
    steps.append(str(f))
    return item.act(spec, f)


def translate_w1(spec: ModuleSpec, w: Certified, m: Sequence[int]) -> Certified:
    """Certified multiple of (m+sigma)(m) from a certified multiple of (n+sigma)(n) in W_1."""
    if _wedge_degree(spec) != 1:
        raise DomainError("translate_w1 acts on F^sigma(omega_1)")
    target = spec.check_degree(m)
    if not any(spec.shifted(target)):
        raise DomainError(f"m+sigma vanishes at {target}")
    if not w.vector.is_homogeneous():
        raise DomainError("expected a nonzero homogeneous vector")
    n = w.vector.degree
    if w.vector.coefficients != _w1_line(spec, n, w.vector.coefficients):
        raise DomainError(f"input is not a multiple of (n+sigma) at {n}")

    steps: List[str] = []
    x = next(a for a in range(1, spec.N + 2) if _k(spec, a, target))
    current = w
    if not _k(spec, x, n):
        y = next(a for a in range(1, spec.N + 2) if _k(spec, a, n))
        hop = tuple(target[idx] if idx + 1 == x else v for idx, v in enumerate(n))
        current = _flat(spec, current, y, hop, steps)
        current = _flat(spec, current, x, target, steps)
    elif n[x - 1] == target[x - 1]:
        current = _flat(spec, current, x, target, steps)
    else:
        j = next(a for a in range(1, spec.N + 2) if a != x)
        current = _cross(spec, current, x, j, target, steps)

    reached = current.vector.is_homogeneous() and current.vector.degree == target
    values = current.vector.coefficients if reached else ()
    if not reached or values != _w1_line(spec, target, values) or not any(values):
        raise VerificationError(f"W_1 translation did not reach a multiple of (m+sigma) at {target}")
    logger.debug("W_1 vector translated", source=n, target=target, steps=len(steps))
    return current


def _w1_line(spec: ModuleSpec, n: Degree, values: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    """Projection of ``values`` onto the line through (n+sigma), as wedge coefficients."""
    direction = wedge_vector(spec.rep, {(a,): c for a, c in enumerate(spec.shifted(n), start=1) if c})
    pivot = next((idx for idx, c in enumerate(direction) if c), None)
    if pivot is None or not values:
        return tuple(values)
    ratio = values[pivot] / direction[pivot]
    return tuple(ratio * c for c in direction)


def _move_pure(
    spec: ModuleSpec,
    item: Certified,
    indices: WedgeIndices,
    m: Degree,
    steps: List[str],
) -> Certified:
    """Translate a certified multiple of e_I(p) to e_I(m).

    Needs a free index (outside I) with nonzero pairing at m, and one at p.
    """
    p = item.vector.degree
    if p == m:
        return item
    free = [b for b in range(1, spec.N + 2) if b not in indices]
    landing = next((b for b in free if _k(spec, b, m)), None)
    if landing is None:
        raise VerificationError(f"m+sigma lies in span(e_I) at {m}; e_I(m) belongs to W~")
    if _k(spec, landing, p):
        if p[landing - 1] == m[landing - 1]:
            return _flat(spec, item, landing, m, steps)
        helper_index = next(b for b in free if b != landing)
        return _cross(spec, item, landing, helper_index, m, steps)
    start = next((b for b in free if _k(spec, b, p)), None)
    if start is None:
        raise VerificationError(f"no free index with nonzero pairing at {p}")
    hop = tuple(m[idx] if idx + 1 == landing else v for idx, v in enumerate(p))
    item = _flat(spec, item, start, hop, steps)
    return _flat(spec, item, landing, m, steps)


def _generic_degree(spec: ModuleSpec, near: Degree, a: int) -> Degree:
    """A degree g with every (e_b|g+sigma) and every (e_b|g-e_a+sigma) nonzero."""
    for t in range(0, 2 * spec.N + 8):
        g = tuple(v + t for v in near)
        low = tuple(v - (1 if idx + 1 == a else 0) for idx, v in enumerate(g))
        if all(spec.shifted(g)) and all(spec.shifted(low)):
            return g
    raise VerificationError(f"no generic degree found near {near}")


def spread_pure_wedge(
    spec: ModuleSpec,
    w: Certified,
    targets: Sequence[Tuple[Sequence[int], Sequence[int]]],
) -> Dict[Tuple[WedgeIndices, Degree], Certified]:
    """Certified basis wedges e_B(m) from one certified pure wedge e_Y(n).

    Index swaps happen at a degree where no pairing vanishes:
    D(e_j, e_a) e_I(g - e_a) - (e_j|g-e_a+sigma) e_I(g) = E_{a,j} e_I(g).
    Targets with m+sigma inside span(e_B) are vectors of W~ and enter as
    known leaves.
    """
    k = _wedge_degree(spec)
    if spec.N < 2 or not 1 <= k <= spec.N - 1:
        raise DomainError(f"spread_pure_wedge needs N >= 2 and 1 <= k <= N-1, got N={spec.N}, k={k}")
    found = pure_wedge(spec, w.vector)
    if found is None:
        raise DomainError("input is not a multiple of a basis wedge")
    start_indices, c = found
    start = w.scaled(1 / c)

    results: Dict[Tuple[WedgeIndices, Degree], Certified] = {}
    for raw_indices, raw_degree in targets:
        sign, indices = sort_with_sign(raw_indices)
        if not sign or len(indices) != k or not all(1 <= b <= spec.N + 1 for b in indices):
            raise DomainError(f"{tuple(raw_indices)} is not a basis wedge of degree {k}")
        m = spec.check_degree(raw_degree)
        goal = basis_wedge(spec, indices, m)
        if not any(_k(spec, b, m) for b in range(1, spec.N + 2) if b not in indices):
            results[(indices, m)] = Certified.from_known(goal, TILDE)
            continue

        steps: List[str] = []
        current, held = start, start_indices
        while held != indices:
            j = min(b for b in held if b not in indices)
            a = min(b for b in indices if b not in held)
            g = _generic_degree(spec, current.vector.degree, a)
            low = tuple(v - (1 if idx + 1 == a else 0) for idx, v in enumerate(g))
            at_low = _move_pure(spec, current, held, low, steps)
            at_g = _move_pure(spec, current, held, g, steps)
            lifted = at_low.act(spec, root_field(spec, j, a, 1))
            lifted = lifted - at_g.scaled(_k(spec, j, low) * _pure_scale(spec, at_low) / _pure_scale(spec, at_g))
            (swap_sign, swapped), = apply_elementary(a, j, held)
            current = lifted.scaled(QQ(swap_sign) / _pure_scale(spec, at_low))
            held = swapped
            steps.append(f"swap e_{j} -> e_{a} at {g}")
        current = _move_pure(spec, current, held, m, steps)
        scale = _pure_scale(spec, current)
        current = current.scaled(1 / scale)
        if current.vector != goal:
            raise VerificationError(f"spreading did not reach e_{indices} at {m}")
        results[(indices, m)] = current
    return results


def _pure_scale(spec: ModuleSpec, item: Certified) -> Scalar:
    found = pure_wedge(spec, item.vector)
    if found is None:
        raise VerificationError("expected a multiple of a basis wedge")
    return found[1]


def _hat(spec: ModuleSpec, a: int) -> WedgeIndices:
    """Indices of e_1 ^ ... ^ e_{a-1} ^ e_{a+1} ^ ... ^ e_{N+1}."""
    return tuple(b for b in range(1, spec.N + 2) if b != a)


def top_class(spec: ModuleSpec, n: Sequence[int], coefficients: Sequence[Scalar]) -> Scalar:
    """(n+sigma) ^ w(n) as a multiple of e_1 ^ ... ^ e_{N+1}, for w in V(omega_N).

    Off n = -sigma this vanishes exactly on the W~_N piece.
    """
    if _wedge_degree(spec) != spec.N:
        raise DomainError(f"top_class acts on F^sigma(omega_N), got {spec!r}")
    s = spec.shifted(n)
    total = ZERO
    for indices, c in wedge_coefficients(spec.rep, coefficients).items():
        a = next(b for b in range(1, spec.N + 2) if b not in indices)
        sign, _ = sort_with_sign((a,) + tuple(indices))
        total += c * sign * s[a - 1]
    return total


def _rebase(spec: ModuleSpec, item: Certified, a: int) -> Certified:
    """Certified e^_a(p) from a certified vector at p outside W~_N; the rest is a W~ leaf."""
    p = item.vector.degree
    have = top_class(spec, p, item.vector.coefficients)
    goal = basis_wedge(spec, _hat(spec, a), p)
    want = top_class(spec, p, goal.coefficients)
    if not have or not want:
        raise VerificationError(f"cannot rebase onto e^_{a} at {p}: a class vanishes modulo W~")
    scaled = item.scaled(want / have)
    correction = goal - scaled.vector
    if correction.is_zero():
        return scaled
    return scaled + Certified.from_known(correction, TILDE)


def translate_top_wedge(spec: ModuleSpec, w: Certified, m: Sequence[int]) -> Certified:
    """Certified e^_a(m) from a certified w(n) outside W~_N, a the first index with (e_a|m+sigma) != 0.

    With (e_x|n+sigma) != 0 and e^_b the wedge of every e_c except e_b:
    D(e_x, r) e^_x(n) = (e_x|n+sigma) e^_x(n+r) when r_x = 0, and
    D(e_j, t e_x) e^_j(p) = (e_j|p+sigma) e^_j(p+t e_x) for j != x. When
    m+sigma is a multiple of e_x, D(e_j - e_x, t(e_j + e_x)) e^_x(m - t e_x - t e_j)
    is a nonzero multiple of e^_x(m) plus a vector of W~.
    """
    if _wedge_degree(spec) != spec.N:
        raise DomainError(f"translate_top_wedge acts on F^sigma(omega_N), got {spec!r}")
    N = spec.N
    target = spec.check_degree(m)
    if not any(spec.shifted(target)):
        raise DomainError(f"m+sigma vanishes at {target}; the whole fiber lies in W~")
    if not w.vector.is_homogeneous():
        raise DomainError("expected a nonzero homogeneous vector")
    n = w.vector.degree
    if not top_class(spec, n, w.vector.coefficients):
        raise DomainError(f"w lies in W~ at {n}")

    steps: List[str] = []
    x = next(a for a in range(1, N + 2) if _k(spec, a, n))
    current = _rebase(spec, w, x)
    t = target[x - 1] - n[x - 1]
    if t == 0:
        current = _flat(spec, current, x, target, steps)
    else:
        level = tuple(n[x - 1] if idx + 1 == x else v for idx, v in enumerate(target))
        j = next((b for b in range(1, N + 2) if b != x and _k(spec, b, target)), None)
        if j is not None:
            current = _flat(spec, current, x, level, steps)
            current = _rebase(spec, current, j)
            f = VectorField.of(_unit(spec, j), _unit(spec, x, t))
        else:
            j = 1 if x != 1 else 2
            source = tuple(v - (t if idx + 1 == j else 0) for idx, v in enumerate(level))
            current = _flat(spec, current, x, source, steps)
            f = VectorField.of(_combo(spec, [(j, 1), (x, -1)]), _combo(spec, [(j, t), (x, t)]))
        steps.append(str(f))
        current = current.act(spec, f)

    a = next(b for b in range(1, N + 2) if _k(spec, b, target))
    current = _rebase(spec, current, a)
    if current.vector != basis_wedge(spec, _hat(spec, a), target):
        raise VerificationError(f"top wedge translation did not reach e^_{a} at {target}")
    logger.debug("top wedge translated", source=n, target=target, x=x, steps=len(steps))
    return current
