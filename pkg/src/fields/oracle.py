"""Brackets checked against the commutator of derivations on Laurent monomials."""
from itertools import product
from typing import Dict, List, Sequence
from sympy.polys.domains import QQ
from src.utils.linalg import Scalar, ZERO
from .vector_field import Degree, VectorField


def _apply(f: VectorField, poly: Dict[Degree, Scalar]) -> Dict[Degree, Scalar]:
    result: Dict[Degree, Scalar] = {}
    for m, c in poly.items():
        coeff, degree = f.apply_to_monomial(m)
        if coeff:
            result[degree] = result.get(degree, ZERO) + c * coeff
    return {d: c for d, c in result.items() if c}


def commutator_on_monomial(f: VectorField, g: VectorField, m: Sequence[int]) -> Dict[Degree, Scalar]:
    """f(g(t^m)) - g(f(t^m)) as a sparse Laurent polynomial."""
    start = {tuple(m): QQ.one}
    left = _apply(f, _apply(g, start))
    right = _apply(g, _apply(f, start))
    result = dict(left)
    for d, c in right.items():
        result[d] = result.get(d, ZERO) - c
    return {d: c for d, c in result.items() if c}


def monomials(rank: int, radius: int) -> List[Degree]:
    return [tuple(m) for m in product(range(-radius, radius + 1), repeat=rank + 1)]


def bracket_matches_derivations(f: VectorField, g: VectorField, radius: int = 2) -> bool:
    """bracket(f, g) agrees with the derivation commutator on every |m|_inf <= radius."""
    h = f.bracket(g)
    for m in monomials(f.rank, radius):
        expected = commutator_on_monomial(f, g, m)
        c, degree = h.apply_to_monomial(m)
        got = {degree: c} if c else {}
        if got != expected:
            return False
    return True
