"""Essential ideal graph of Z_n, built two independent ways.

The definitional route puts an edge between two nonzero proper ideals exactly
when their sum is essential (checked by the definitional oracle).  The
structural route groups nonessential ideals into classes by their saturated
index set, builds the class host graph (edges between classes with disjoint
index sets), blows each class up to a null graph via the generalized join, and
joins the result onto the clique of essential ideals.  Both routes share the
exponent-vector labels, so agreement is plain edge-set equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import prod

from .graphs import LabeledGraph, complete_graph, generalized_join, join, null_graph, to_dot
from .ideals import (
    Factorization,
    Vector,
    essential_count,
    essential_ideals,
    ideal_sum,
    is_essential_oracle,
)


@dataclass(frozen=True)
class IdealClass:
    """One class of nonessential ideals sharing a saturated index set."""

    key: frozenset[int]
    representative: Vector
    members: tuple[Vector, ...]
    size: int


@dataclass(frozen=True)
class ClassPartition:
    """All 2^k - 2 classes, ordered by (|key|, sorted key)."""

    fact: Factorization
    classes: tuple[IdealClass, ...]

    def __len__(self) -> int:
        return len(self.classes)

    def by_key(self, key: frozenset[int]) -> IdealClass:
        for c in self.classes:
            if c.key == key:
                return c
        raise KeyError(sorted(key))


@dataclass(frozen=True)
class StructureReport:
    """Outcome of rebuilding the graph structurally and comparing routes."""

    fact: Factorization
    clique_order: int
    host: LabeledGraph | None
    factor_orders: tuple[int, ...]
    assembled: LabeledGraph
    bruteforce: LabeledGraph
    equal: bool


def _proper_nonempty_subsets(k: int) -> list[frozenset[int]]:
    out: list[frozenset[int]] = []
    for size in range(1, k):
        out.extend(frozenset(c) for c in itertools.combinations(range(1, k + 1), size))
    return out


@lru_cache(maxsize=None)
def class_partition(fact: Factorization) -> ClassPartition:
    """Partition the nonessential ideals by saturated index set.

    Empty for k = 1 (every nonzero proper ideal of Z_{p^t} is essential).
    Class size is prod of the unsaturated exponents; the representative is the
    member with zeros off the saturated positions, which is both the smallest
    generator and the lexicographically smallest exponent vector.
    """
    k = fact.k
    if k == 1:
        return ClassPartition(fact=fact, classes=())
    classes: list[IdealClass] = []
    for key in _proper_nonempty_subsets(k):
        ranges = [
            [m] if (i + 1) in key else list(range(m))
            for i, m in enumerate(fact.exponents)
        ]
        members = sorted(itertools.product(*ranges), key=fact.generator)
        rep = tuple(m if (i + 1) in key else 0 for i, m in enumerate(fact.exponents))
        size = prod(m for i, m in enumerate(fact.exponents) if (i + 1) not in key)
        if members[0] != rep or len(members) != size:
            raise RuntimeError(f"class {sorted(key)} of n={fact.n} broke its own invariants")
        classes.append(IdealClass(key=key, representative=rep, members=tuple(members), size=size))
    return ClassPartition(fact=fact, classes=tuple(classes))


@lru_cache(maxsize=None)
def build_essential_graph_bruteforce(fact: Factorization) -> LabeledGraph:
    """The essential ideal graph straight from the definition.

    Vertices are all nonzero proper ideals (exponent-vector labels); two are
    adjacent exactly when their sum is an essential ideal, essentiality decided
    by the definitional oracle.  A sum equal to the whole ring counts as
    essential.
    """
    from .ideals import enumerate_ideals

    vecs = enumerate_ideals(fact)
    edges = [
        (a, b)
        for a, b in itertools.combinations(vecs, 2)
        if is_essential_oracle(ideal_sum(a, b), fact)
    ]
    return LabeledGraph(vecs, edges)


@lru_cache(maxsize=None)
def build_host_graph(fact: Factorization) -> LabeledGraph:
    """Class host graph: one vertex per class, edges between disjoint index sets.

    Vertices are labeled by the class representative vectors, in class order.
    """
    if fact.k < 2:
        raise ValueError("host graph needs k >= 2 prime factors")
    part = class_partition(fact)
    labels = [c.representative for c in part.classes]
    edges = [
        (a.representative, b.representative)
        for a, b in itertools.combinations(part.classes, 2)
        if not (a.key & b.key)
    ]
    return LabeledGraph(labels, edges)


def build_aig_squarefree(primes: tuple[int, ...]) -> LabeledGraph:
    """Annihilating-ideal graph of Z_N for squarefree N = product of the primes.

    Vertices are the 2^k - 2 proper divisors 1 < d < N; d and e are adjacent
    exactly when N divides d*e.
    """
    primes = tuple(primes)
    if len(primes) < 2 or len(set(primes)) != len(primes):
        raise ValueError("need at least two distinct primes")
    n = prod(primes)
    divisors = sorted(
        prod(sub)
        for size in range(1, len(primes))
        for sub in itertools.combinations(primes, size)
    )
    edges = [(d, e) for d, e in itertools.combinations(divisors, 2) if (d * e) % n == 0]
    return LabeledGraph(tuple(divisors), edges)


def host_aig_isomorphism(fact: Factorization) -> tuple[dict[Vector, int], bool]:
    """Map each host class to a divisor of the squarefree radical and verify it.

    The class with saturated set S maps to the product of the primes outside S.
    Returns the mapping plus whether it is a bijection onto the
    annihilating-ideal graph's vertices that preserves adjacency and
    non-adjacency.  A False verdict signals an implementation bug.
    """
    host = build_host_graph(fact)
    aig = build_aig_squarefree(fact.primes)
    part = class_partition(fact)
    mapping = {
        c.representative: prod(p for i, p in enumerate(fact.primes) if (i + 1) not in c.key)
        for c in part.classes
    }
    if set(mapping.values()) != set(aig.labels) or len(set(mapping.values())) != len(mapping):
        return mapping, False
    for u, v in itertools.combinations(host.labels, 2):
        if host.has_edge(u, v) != aig.has_edge(mapping[u], mapping[v]):
            return mapping, False
    return mapping, True


@lru_cache(maxsize=None)
def assemble_structured(fact: Factorization) -> LabeledGraph:
    """Rebuild the essential ideal graph from the class decomposition.

    Essential ideals form a clique joined to everything; the nonessential side
    is the generalized join of null graphs (one per class) over the host.
    For k = 1 there is no nonessential side and the result is the bare clique.
    """
    clique = complete_graph(essential_ideals(fact))
    if fact.k == 1:
        return clique
    part = class_partition(fact)
    host = build_host_graph(fact)
    factors = [null_graph(c.members) for c in part.classes]
    blown_up = generalized_join(host, factors)
    return join(clique, blown_up)


def verify_structure(fact: Factorization) -> StructureReport:
    """Build both routes and compare them as labeled edge sets."""
    brute = build_essential_graph_bruteforce(fact)
    assembled = assemble_structured(fact)
    host = build_host_graph(fact) if fact.k >= 2 else None
    part = class_partition(fact)
    equal = (
        set(assembled.labels) == set(brute.labels)
        and assembled.edge_label_set() == brute.edge_label_set()
    )
    return StructureReport(
        fact=fact,
        clique_order=essential_count(fact),
        host=host,
        factor_orders=tuple(c.size for c in part.classes),
        assembled=assembled,
        bruteforce=brute,
        equal=equal,
    )


_PALETTE = (
    "lightblue", "palegreen", "lightsalmon", "plum", "khaki", "lightpink",
    "aquamarine", "wheat", "thistle", "lightgray", "peachpuff", "powderblue",
    "honeydew", "mistyrose",
)


def essential_graph_dot(fact: Factorization) -> str:
    """DOT export of the essential ideal graph, colored by class.

    Essential ideals share one color; each nonessential class gets its own.
    Vertex labels are the generator integers.
    """
    g = build_essential_graph_bruteforce(fact)
    part = class_partition(fact)
    color_of: dict[Vector, str] = {v: "gold" for v in essential_ideals(fact)}
    for i, c in enumerate(part.classes):
        for v in c.members:
            color_of[v] = _PALETTE[i % len(_PALETTE)]
    return to_dot(
        g,
        name=f"essential_Z{fact.n}",
        label=lambda v: str(fact.generator(v)),
        fillcolor=color_of.__getitem__,
    )
