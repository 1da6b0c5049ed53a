"""Replayable membership certificates.

A certificate is a DAG whose leaves are seed vectors (or vectors of a
submodule the argument is allowed to assume) and whose inner nodes either
act with one divergence-zero field or take a rational linear combination.
Replaying the DAG from the seeds recomputes the certified vector exactly.
"""
from dataclasses import dataclass
from typing import Callable, Dict, List, Mapping, Optional, Sequence, Tuple
from sympy.polys.domains import QQ
from src.config import settings
from src.fields import VectorField, format_field
from src.modules import GradedVector, ModuleSpec, act
from src.utils.errors import DomainError, VerificationError
from src.utils.linalg import Scalar
from src.utils.metrics import CERTIFICATES_REPLAYED
from src.utils.rationals import format_rational

KnownChecks = Mapping[str, Callable[[GradedVector], bool]]


class Certificate:
    """One node of a certificate DAG. Nodes compare by identity."""

    __slots__ = ("op", "seed", "field", "terms", "vector", "label")

    def __init__(
        self,
        op: str,
        seed: Optional[int] = None,
        field: Optional[VectorField] = None,
        terms: Tuple[Tuple[Scalar, "Certificate"], ...] = (),
        vector: Optional[GradedVector] = None,
        label: Optional[str] = None,
    ):
        self.op = op
        self.seed = seed
        self.field = field
        self.terms = terms
        self.vector = vector
        self.label = label

    @classmethod
    def from_seed(cls, index: int) -> "Certificate":
        return cls("seed", seed=index)

    @classmethod
    def from_known(cls, vector: GradedVector, label: str) -> "Certificate":
        """A vector of a submodule that the surrounding argument assumes is present."""
        return cls("known", vector=vector, label=label)

    def then(self, f: VectorField) -> "Certificate":
        return Certificate("act", field=f, terms=((QQ(1), self),))

    @staticmethod
    def combine(terms: Sequence[Tuple[object, "Certificate"]]) -> "Certificate":
        return Certificate("sum", terms=tuple((QQ.convert(c), node) for c, node in terms))

    @property
    def children(self) -> List["Certificate"]:
        return [node for _, node in self.terms]

    def nodes(self) -> List["Certificate"]:
        """Every node reachable from this one, children before parents."""
        return postorder([self])

    @property
    def size(self) -> int:
        return len(self.nodes())

    def _evaluate(
        self,
        spec: ModuleSpec,
        seeds: Sequence[GradedVector],
        known: Optional[KnownChecks],
        cache: Dict[int, GradedVector],
    ) -> GradedVector:
        if self.op == "seed":
            if self.seed is None or not 0 <= self.seed < len(seeds):
                raise VerificationError(f"certificate refers to missing seed {self.seed}")
            return seeds[self.seed]
        if self.op == "known":
            assert self.vector is not None
            check = (known or {}).get(self.label or "")
            if check is None:
                raise VerificationError(f"no membership check for assumed submodule {self.label!r}")
            if not check(self.vector):
                raise VerificationError(f"assumed vector is not in {self.label}")
            return self.vector
        if self.op == "act":
            assert self.field is not None
            return act(spec, self.field, cache[id(self.terms[0][1])])
        total = GradedVector.zero(spec.dim)
        for c, node in self.terms:
            total = total + cache[id(node)].scaled(c)
        return total

    def replay(
        self,
        spec: ModuleSpec,
        seeds: Sequence[GradedVector],
        known: Optional[KnownChecks] = None,
        cache: Optional[Dict[int, GradedVector]] = None,
    ) -> GradedVector:
        """Recompute the certified vector; ``cache`` may be shared across replays."""
        memo = cache if cache is not None else {}
        for node in self.nodes():
            if id(node) not in memo:
                memo[id(node)] = node._evaluate(spec, seeds, known, memo)
        return memo[id(self)]

    def to_records(self) -> List[Dict[str, object]]:
        """Flat node list; every node refers to earlier ids only."""
        records, _ = export_dag([self])
        return records

    def operator_words(self, limit: int = 512) -> Optional[List[Tuple[Scalar, str, Tuple[str, ...]]]]:
        """Expand into sum of coefficient * word(source); None past ``limit`` words.

        Words list fields in application order.
        """
        expanded: Dict[int, Dict[Tuple[str, Tuple[str, ...]], Scalar]] = {}
        for node in self.nodes():
            words: Dict[Tuple[str, Tuple[str, ...]], Scalar] = {}
            if node.op == "seed":
                words[(f"seed[{node.seed}]", ())] = QQ(1)
            elif node.op == "known":
                words[(f"{node.label}", ())] = QQ(1)
            elif node.op == "act":
                name = format_field(node.field)  # type: ignore[arg-type]
                for (source, word), c in expanded[id(node.terms[0][1])].items():
                    words[(source, word + (name,))] = c
            else:
                for coeff, child in node.terms:
                    for key, c in expanded[id(child)].items():
                        words[key] = words.get(key, QQ(0)) + coeff * c
                words = {key: c for key, c in words.items() if c}
            if len(words) > limit:
                return None
            expanded[id(node)] = words
        return [(c, source, word) for (source, word), c in sorted(expanded[id(self)].items())]

    def __repr__(self) -> str:
        return f"<Certificate(op={self.op}, nodes={self.size})>"


@dataclass(frozen=True)
class Certified:
    """A graded vector together with a certificate that reproduces it."""

    vector: GradedVector
    certificate: Certificate

    @classmethod
    def from_seed(cls, seeds: Sequence[GradedVector], index: int) -> "Certified":
        return cls(seeds[index], Certificate.from_seed(index))

    @classmethod
    def from_known(cls, vector: GradedVector, label: str) -> "Certified":
        return cls(vector, Certificate.from_known(vector, label))

    @staticmethod
    def combine(dim: int, terms: Sequence[Tuple[object, "Certified"]]) -> "Certified":
        live = [(QQ.convert(c), item) for c, item in terms if QQ.convert(c)]
        total = GradedVector.zero(dim)
        for c, item in live:
            total = total + item.vector.scaled(c)
        return Certified(total, Certificate.combine([(c, item.certificate) for c, item in live]))

    def act(self, spec: ModuleSpec, f: VectorField) -> "Certified":
        return Certified(act(spec, f, self.vector), self.certificate.then(f))

    def scaled(self, c: object) -> "Certified":
        return Certified.combine(self.vector.dim, [(c, self)])

    def __add__(self, other: "Certified") -> "Certified":
        return Certified.combine(self.vector.dim, [(1, self), (1, other)])

    def __sub__(self, other: "Certified") -> "Certified":
        return Certified.combine(self.vector.dim, [(1, self), (-1, other)])

    def verify(
        self,
        spec: ModuleSpec,
        seeds: Sequence[GradedVector],
        known: Optional[KnownChecks] = None,
    ) -> bool:
        """Replay the certificate and compare with the stored vector."""
        ok = self.certificate.replay(spec, seeds, known) == self.vector
        count_replay(ok)
        return ok


def count_replay(ok: bool) -> None:
    if settings.enable_metrics:
        CERTIFICATES_REPLAYED.labels(outcome="match" if ok else "mismatch").inc()


def homogeneous_parts(spec: ModuleSpec, item: Certified) -> List[Certified]:
    """Certified homogeneous components, separated with the Cartan field D(u, 0).

    D(u, 0) acts on degree n by (u|n+sigma); with u = (1, L, L^2, ...) and L
    larger than the spread of the support these scalars are pairwise distinct,
    so Lagrange interpolation isolates each degree.
    """
    degrees = item.vector.degrees
    if not degrees:
        raise DomainError("zero vector has no homogeneous parts")
    if len(degrees) == 1:
        return [item]
    spread = max(max(n) for n in degrees) - min(min(n) for n in degrees)
    base = 2 * spread + 1
    u = tuple(base ** a for a in range(spec.N + 1))
    cartan = VectorField.of(u, [0] * (spec.N + 1))

    def value(n: Tuple[int, ...]) -> Scalar:
        return sum((QQ(a) * s for a, s in zip(u, spec.shifted(n))), QQ(0))

    parts = []
    for n in degrees:
        current = item
        for other in degrees:
            if other == n:
                continue
            gap = value(n) - value(other)
            shifted = current.act(spec, cartan)
            current = Certified.combine(spec.dim, [(1 / gap, shifted), (-value(other) / gap, current)])
        if current.vector != GradedVector.homogeneous(spec.dim, n, item.vector.at(n)):
            raise VerificationError(f"could not isolate the degree {n} component")
        parts.append(current)
    return parts


def postorder(roots: Sequence[Certificate]) -> List[Certificate]:
    """Nodes reachable from ``roots``, children before parents, each once."""
    order: List[Certificate] = []
    seen = set()
    stack: List[Tuple[Certificate, bool]] = [(root, False) for root in reversed(roots)]
    while stack:
        node, expanded = stack.pop()
        if id(node) in seen:
            continue
        if expanded:
            seen.add(id(node))
            order.append(node)
            continue
        stack.append((node, True))
        for child in node.children:
            if id(child) not in seen:
                stack.append((child, False))
    return order


def export_dag(roots: Sequence[Certificate]) -> Tuple[List[Dict[str, object]], List[int]]:
    """Shared flat node list for several certificates, plus the id of each root."""
    ids: Dict[int, int] = {}
    records: List[Dict[str, object]] = []
    for position, node in enumerate(postorder(roots)):
        ids[id(node)] = position
        record: Dict[str, object] = {"id": position, "op": node.op}
        if node.op == "seed":
            record["seed"] = node.seed
        elif node.op == "known":
            assert node.vector is not None
            record["label"] = node.label
            record["vector"] = node.vector.to_json()
        elif node.op == "act":
            record["field"] = format_field(node.field)  # type: ignore[arg-type]
            record["of"] = ids[id(node.terms[0][1])]
        else:
            record["terms"] = [[format_rational(c), ids[id(child)]] for c, child in node.terms]
        records.append(record)
    return records, [ids[id(root)] for root in roots]


def replay_all(
    spec: ModuleSpec,
    certificates: Sequence[Certificate],
    seeds: Sequence[GradedVector],
    known: Optional[KnownChecks] = None,
) -> List[GradedVector]:
    """Replay several certificates over one shared cache."""
    cache: Dict[int, GradedVector] = {}
    for node in postorder(certificates):
        cache[id(node)] = node._evaluate(spec, seeds, known, cache)
    return [cache[id(certificate)] for certificate in certificates]
