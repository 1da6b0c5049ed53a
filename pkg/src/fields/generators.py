from itertools import product
from typing import List, Set, Tuple
from sympy.polys.domains import QQ
from src.utils.linalg import dot, scale, sub
from src.utils.prng import Sampler
from .vector_field import VectorField


def generators(N: int, R: int) -> List[VectorField]:
    """The spanning set d_a, r_b t^r d_a - r_a t^r d_b for |r|_inf <= R.

    Cartan fields come first, then shifts in lexicographic order of r and
    pairs a < b; zero fields and exact duplicates are dropped.
    """
    if R < 0:
        raise ValueError(f"generator radius must be nonnegative, got {R}")
    result = [VectorField.cartan(N, a) for a in range(1, N + 2)]
    seen: Set[Tuple[object, ...]] = {(f.u, f.r) for f in result}
    for r in product(range(-R, R + 1), repeat=N + 1):
        if not any(r):
            continue
        for a in range(1, N + 2):
            for b in range(a + 1, N + 2):
                u = [0] * (N + 1)
                u[a - 1] += r[b - 1]
                u[b - 1] -= r[a - 1]
                f = VectorField.of(u, r)
                if f.is_zero() or (f.u, f.r) in seen:
                    continue
                seen.add((f.u, f.r))
                result.append(f)
    return result


def random_divergence_free_field(sampler: Sampler, N: int, R: int) -> VectorField:
    """Small rational u projected orthogonally to a random shift r with |r|_inf <= R."""
    while True:
        r = sampler.integers(N + 1, R)
        u = sampler.vector(N + 1)
        if any(r):
            u = sub(u, scale(dot(u, r) / QQ(dot(r, r)), [QQ(x) for x in r]))
        f = VectorField(u=u, r=r)
        if not f.is_zero():
            return f
