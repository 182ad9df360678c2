"""Hypergraphs, the monotone-function correspondence, and hyperedge-surjective
homomorphism search.

``lemma4_check`` compares the two sides of the homomorphism criterion for
the substitution preorder on monotone functions, on the hypergraphs as
given (no normalization).  The criterion can fail when an edge set
contains comparable edges or leaves a vertex uncovered; see the package
README for a two-vertex example.  ``is_reduced`` tests for the scope on
which the criterion is exact.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional

from . import _tables as tb
from .core import BooleanFunction, minimal_true_points
from .classes import is_monotone
from .minor import SearchBudgetExceeded, _Budget, minor_leq


@dataclass(frozen=True)
class Hypergraph:
    vertex_count: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        if self.vertex_count < 1:
            raise ValueError("a hypergraph needs at least one vertex")
        for e in self.edges:
            if not e:
                raise ValueError("edges must be nonempty")
            if any(not 1 <= v <= self.vertex_count for v in e):
                raise ValueError("edge vertex out of range")

    @classmethod
    def of(cls, vertex_count: int, *edges) -> "Hypergraph":
        return cls(vertex_count, frozenset(frozenset(e) for e in edges))

    def __str__(self):
        parts = sorted(tuple(sorted(e)) for e in self.edges)
        body = "".join("{%s}" % ",".join(map(str, e)) for e in parts)
        return f"hg:{self.vertex_count}:{body}"


@dataclass(frozen=True)
class HomWitness:
    """Vertex map of a hyperedge-surjective homomorphism."""

    mapping: tuple[int, ...]  # mapping[v-1] is the image of vertex v

    def image(self, edge: frozenset[int]) -> frozenset[int]:
        return frozenset(self.mapping[v - 1] for v in edge)

    def verify(self, G: "Hypergraph", H: "Hypergraph") -> bool:
        if len(self.mapping) != G.vertex_count:
            return False
        if any(self.image(e) not in H.edges for e in G.edges):
            return False
        for target in H.edges:
            preimage = frozenset(
                v for v in range(1, G.vertex_count + 1) if self.mapping[v - 1] in target)
            if preimage not in G.edges:
                return False
        return True


_HG_RE = re.compile(r"^hg:(\d+):((?:\{[0-9,]*\})*)$")


def parse_hypergraph(text: str) -> Hypergraph:
    m = _HG_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad hypergraph literal {text!r}")
    n = int(m.group(1))
    edges = []
    for body in re.findall(r"\{([0-9,]*)\}", m.group(2)):
        if not body:
            raise ValueError("edges must be nonempty")
        edges.append(frozenset(int(v) for v in body.split(",")))
    return Hypergraph(n, frozenset(edges))


def complete_graph(n: int) -> Hypergraph:
    if n < 2:
        raise ValueError("complete graphs need n >= 2")
    edges = frozenset(frozenset({i, j}) for i in range(1, n + 1) for j in range(i + 1, n + 1))
    return Hypergraph(n, edges)


def function_of(G: Hypergraph) -> BooleanFunction:
    """The monotone function whose conjuncts are the hyperedges; an empty
    edge set denotes the constant 0."""
    n = G.vertex_count
    if n > tb.MAX_ARITY:
        raise ValueError(f"vertex count above {tb.MAX_ARITY}")
    table = 0
    for edge in G.edges:
        mask = tb.full_mask(n)
        for v in edge:
            mask &= tb.projection_mask(n, v)
        table |= mask
    return BooleanFunction(n, table)


def hypergraph_of(f: BooleanFunction) -> Hypergraph:
    """The hypergraph of minimal true points of a monotone function.  The
    constant 1 is rejected: it would need the empty edge."""
    if not is_monotone(f):
        raise ValueError("hypergraph_of expects a monotone function")
    if f.table == tb.full_mask(f.arity):
        raise ValueError("the constant 1 has no nonempty-edge representation")
    edges = []
    for p in minimal_true_points(f):
        edges.append(frozenset(j + 1 for j in range(f.arity) if p >> j & 1))
    return Hypergraph(f.arity, frozenset(edges))


def is_reduced(G: Hypergraph) -> bool:
    """No comparable edge pair and no uncovered vertex: the hypergraphs in
    the image of ``hypergraph_of`` when every variable is essential."""
    edges = list(G.edges)
    for i, e in enumerate(edges):
        for other in edges[i + 1:]:
            if e <= other or other <= e:
                return False
    covered = frozenset().union(*edges) if edges else frozenset()
    return covered == frozenset(range(1, G.vertex_count + 1)) or not edges


def edge_surjective_hom(G: Hypergraph, H: Hypergraph,
                        budget: Optional[int] = None) -> Optional[HomWitness]:
    """A hyperedge-surjective homomorphism from G to H, or None.

    Backtracks over vertex images; edges whose vertices are all assigned
    must land in E(H), and the preimage-exactness condition is checked
    once the map is total.
    """
    if G.vertex_count > 12 or H.vertex_count > 12:
        raise ValueError("homomorphism search caps vertex counts at 12")
    bud = _Budget(budget)
    nG, nH = G.vertex_count, H.vertex_count
    edges_by_last: dict[int, list[frozenset[int]]] = {v: [] for v in range(1, nG + 1)}
    for e in G.edges:
        edges_by_last[max(e)].append(e)

    mapping = [0] * nG
    result: Optional[HomWitness] = None

    def recurse(v: int) -> bool:
        nonlocal result
        bud.spend()
        if v > nG:
            witness = HomWitness(tuple(mapping))
            if witness.verify(G, H):
                result = witness
                return True
            return False
        for img in range(1, nH + 1):
            mapping[v - 1] = img
            ok = True
            for e in edges_by_last[v]:
                if frozenset(mapping[u - 1] for u in e) not in H.edges:
                    ok = False
                    break
            if ok and recurse(v + 1):
                return True
        mapping[v - 1] = 0
        return False

    recurse(1)
    return result


def lemma4_check(G: Hypergraph, H: Hypergraph,
                 budget: Optional[int] = None) -> bool:
    """Whether the homomorphism side and the substitution-preorder side
    agree on this pair: (some hyperedge-surjective G -> H) iff
    function_of(H) is below function_of(G)."""
    hom = edge_surjective_hom(G, H, budget) is not None
    leq = minor_leq(function_of(H), function_of(G), budget) is not None
    return hom == leq
