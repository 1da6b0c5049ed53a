"""Reaching a multiple of v_lambda(n) from any nonzero homogeneous vector.

Both procedures only ever apply divergence-zero fields to the input and take
linear combinations, so every output carries a certificate.
"""
from dataclasses import dataclass
from typing import List, Optional, Tuple
from sympy.polys.domains import QQ
from src.modules import (
    GradedVector,
    ModuleSpec,
    elementary_symmetric,
    pairing_constant,
    product_shifts,
    product_word,
    root_field,
)
from src.representations import weight_component, weight_decompose
from src.utils.errors import DomainError, VerificationError
from src.utils.linalg import Scalar, Vector
from src.utils.logger import get_logger
from src.weights import is_minuscule
from .certificates import Certified

logger = get_logger(__name__)


@dataclass(frozen=True)
class Extraction:
    result: Certified
    steps: Tuple[str, ...] = ()


def top_component(spec: ModuleSpec, coeffs: Vector) -> Vector:
    return weight_component(spec.rep, coeffs, tuple([0] * spec.N))


def hw_multiple(spec: ModuleSpec, coeffs: Vector) -> Optional[Scalar]:
    """c when coeffs == c * v_lambda with c != 0, otherwise None."""
    top = spec.rep.hw_index
    if not coeffs[top] or any(x for idx, x in enumerate(coeffs) if idx != top):
        return None
    return coeffs[top]


def normalize_hw(spec: ModuleSpec, item: Certified) -> Certified:
    """Rescale a certified c * v_lambda(n) to exactly v_lambda(n)."""
    if not item.vector.is_homogeneous():
        raise VerificationError("expected a homogeneous multiple of v_lambda")
    c = hw_multiple(spec, item.vector.coefficients)
    if c is None:
        raise VerificationError(f"vector at {item.vector.degree} is not a multiple of v_lambda")
    return item if c == 1 else item.scaled(1 / c)


def _require_homogeneous(w: Certified) -> None:
    if w.vector.is_zero():
        raise DomainError("expected a nonzero vector")
    if not w.vector.is_homogeneous():
        raise DomainError("expected a homogeneous vector")


def extract_hw_component(spec: ModuleSpec, w: Certified) -> Extraction:
    """Raise w until its V_lambda component is nonzero.

    Each step takes the highest weight mu in the support, a simple raising
    E_{i,i+1} that does not kill v_mu, and applies D(e_{i+1}, e_i); the new
    component at mu + alpha_i is E_{i,i+1} v_mu.
    """
    _require_homogeneous(w)
    rep = spec.rep
    current = w
    steps: List[str] = []
    for _ in range(spec.dim + 1):
        coeffs = current.vector.coefficients
        if any(top_component(spec, coeffs)):
            return Extraction(current, tuple(steps))
        offset, part = min(weight_decompose(rep, coeffs), key=lambda item: (sum(item[0]), item[0]))
        raising = next((i for i in range(1, spec.N + 1) if any(rep.apply(i, i + 1, part))), None)
        if raising is None:
            raise VerificationError(f"weight component {offset} is killed by every simple raising operator")
        f = root_field(spec, raising + 1, raising, 1)
        current = current.act(spec, f)
        steps.append(str(f))
    raise VerificationError(f"no V_lambda component after {spec.dim} raising steps")


def extract_power(spec: ModuleSpec, i: int, j: int, k: int, w: Certified) -> Certified:
    """Certified E_ij^k v(n) from a certified homogeneous v(n).

    The product over r = (1, ..., 1, -(m-1)) equals
    sum_t K_0^{m-t} e_t(r) E_ij^t v with e_1(r) = 0, so E_ij^m v follows from
    v and the lower powers E_ij^2 v, ..., E_ij^{m-1} v.
    """
    _require_homogeneous(w)
    if k == 0:
        return w
    if k == 1:
        raise DomainError("E_ij^1 is not isolated by the operator product")
    n = w.vector.degree
    k0 = pairing_constant(spec, j, n)
    powers = {0: w}
    for m in range(2, k + 1):
        shifts = product_shifts(m)
        product = w
        for f in product_word(spec, i, j, m, shifts):
            product = product.act(spec, f)
        terms: List[Tuple[object, Certified]] = [(1, product)]
        for t in range(m):
            if t == 1:
                continue
            coeff = QQ(elementary_symmetric(shifts, t)) * k0 ** (m - t)
            if coeff:
                terms.append((-coeff, powers[t]))
        lead = QQ(elementary_symmetric(shifts, m))
        powers[m] = Certified.combine(spec.dim, terms).scaled(1 / lead)

    expected = spec.rep.apply_power(i, j, k, w.vector.coefficients)
    if powers[k].vector != GradedVector.homogeneous(spec.dim, n, expected):
        raise VerificationError(f"operator product did not reproduce E_{i},{j}^{k}")
    return powers[k]


def extract_hw_vector(spec: ModuleSpec, w: Certified) -> Extraction:
    """Down-up passes E_{b,a}^c then E_{a,b}^c over shrinking windows [a, b].

    A pass keeps only the tops of maximal strings of the window; the next
    window drops the first or the last index, whichever keeps a
    non-minuscule label. Two minuscule halves mean C_a = C_{b-1} = 1 with
    zeros between, where the maximal string is unique.
    """
    _require_homogeneous(w)
    lam = spec.lam
    if is_minuscule(lam):
        raise DomainError(f"lambda={lam} is minuscule")
    if not any(top_component(spec, w.vector.coefficients)):
        raise DomainError("the V_lambda component of the input vanishes")

    a, b = 1, spec.N + 1
    current = w
    steps: List[str] = []
    while hw_multiple(spec, current.vector.coefficients) is None:
        c = sum(lam[a - 1:b - 1])
        current = extract_power(spec, b, a, c, current)
        current = extract_power(spec, a, b, c, current)
        steps.append(f"window {a}..{b}: E_{b},{a}^{c} then E_{a},{b}^{c}")
        if hw_multiple(spec, current.vector.coefficients) is not None:
            break
        if b - a == 1:
            raise VerificationError(f"sl_2 window {a}..{b} left more than v_lambda")
        if not is_minuscule(lam[a - 1:b - 2]):
            b -= 1
        elif not is_minuscule(lam[a:b - 1]):
            a += 1
        else:
            raise VerificationError(f"unique maximal string in window {a}..{b} left more than v_lambda")

    logger.debug("highest weight vector extracted", degree=current.vector.degree, passes=len(steps))
    return Extraction(current, tuple(steps))
