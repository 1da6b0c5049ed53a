from enum import Enum
from typing import List
from src.config import settings
from src.fields import Degree
from src.modules import GradedVector, ModuleSpec, WedgeSubmodule
from src.utils.errors import DomainError
from src.utils.linalg import ZERO, add, scale, unit_vector
from src.utils.prng import Sampler
from .box import TruncationBox


class SeedKind(str, Enum):
    RANDOM = "random"
    IN_W = "W"
    OUTSIDE = "outside"


class SeedPlacement(str, Enum):
    CENTER = "0"
    POLE = "-sigma"


def _next_to(box: TruncationBox, n: Degree) -> Degree:
    moved = (n[0] + 1,) + tuple(n[1:])
    if not box.contains(moved):
        raise DomainError(f"no room for a seed next to {n} in the outer box")
    return moved


def seed_vectors(
    spec: ModuleSpec,
    kind: SeedKind,
    placement: SeedPlacement,
    box: TruncationBox,
    sampler: Sampler,
) -> List[GradedVector]:
    """Seeds for a closure run.

    ``-sigma`` seeds the whole fiber at n = -sigma. Otherwise one vector at
    the box center, moved one step along e_1 when the center fiber cannot
    hold the requested kind.
    """
    if placement is SeedPlacement.POLE:
        pole = spec.degenerate_degree
        if pole is None:
            raise DomainError("seeding at -sigma needs an integral sigma")
        if not box.contains(pole):
            raise DomainError(f"-sigma = {pole} lies outside the outer box")
        return [GradedVector.homogeneous(spec.dim, pole, unit_vector(spec.dim, idx)) for idx in range(spec.dim)]

    n = box.center
    if kind is SeedKind.RANDOM:
        return [GradedVector.homogeneous(spec.dim, n, sampler.vector(spec.dim))]

    if spec.wedge_degree is None:
        raise DomainError(f"seeds relative to W need a wedge module, got {spec!r}")

    if kind is SeedKind.IN_W:
        submodule = WedgeSubmodule(spec)
        if not submodule.piece(n).rank:
            n = _next_to(box, n)
        basis = submodule.piece(n).basis()
        if not basis:
            raise DomainError(f"W_{spec.wedge_degree} is zero; no seed inside it")
        coeffs = tuple([ZERO] * spec.dim)
        for row in basis:
            coeffs = add(coeffs, scale(sampler.nonzero_integer(), row))
        return [GradedVector.homogeneous(spec.dim, n, coeffs)]

    tilde = WedgeSubmodule(spec, tilde=True)
    if tilde.piece(n).is_full:
        n = _next_to(box, n)
    if tilde.piece(n).is_full:
        raise DomainError(f"W~_{spec.wedge_degree} fills the fiber at {n}; no seed outside it")
    for _ in range(settings.seed_attempts):
        coeffs = sampler.vector(spec.dim)
        if not tilde.piece(n).contains(coeffs):
            return [GradedVector.homogeneous(spec.dim, n, coeffs)]
    raise DomainError(f"no sampled vector left W~ at {n} in {settings.seed_attempts} draws")
