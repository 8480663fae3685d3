"""Finite simple graphs with positive integer vertex labels.

The two fundamental operators are the induced subgraph and the reconnected
complement.  Vertex labels double as the total order used by the monomial
machinery, so graphs are always stored with strictly ascending labels and
canonical (min, max) edges.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Base class for graph validation errors."""


class DuplicateLabelError(GraphError):
    pass


class LoopEdgeError(GraphError):
    pass


class DanglingEndpointError(GraphError):
    pass


class NotConnectedError(GraphError):
    pass


class CapExceededError(GraphError):
    """A size cap guarding an exponential enumeration was exceeded."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph: ascending vertex labels, canonical edge pairs."""

    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def has_edge(self, a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in _edge_set(self)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return labels_of(self, _adjacency(self)[_bit_index(self)[v]])

    def to_json(self) -> dict:
        return {"vertices": list(self.vertices), "edges": [list(e) for e in self.edges]}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Graph({list(self.vertices)}, {[list(e) for e in self.edges]})"


EMPTY_GRAPH = Graph((), ())


def make_graph(vertices: Iterable[int], edges: Iterable[Sequence[int]]) -> Graph:
    """Validate and canonicalize; duplicate edges are absorbed, loops rejected."""
    vs = list(vertices)
    if len(set(vs)) != len(vs):
        raise DuplicateLabelError(f"duplicate vertex labels in {vs}")
    if any(not isinstance(v, int) or v <= 0 for v in vs):
        raise GraphError(f"vertex labels must be positive integers: {vs}")
    vset = set(vs)
    canon = set()
    for e in edges:
        a, b = e
        if a == b:
            raise LoopEdgeError(f"loop edge ({a},{b}) not allowed")
        if a not in vset or b not in vset:
            raise DanglingEndpointError(f"edge ({a},{b}) has endpoint outside {sorted(vset)}")
        canon.add((min(a, b), max(a, b)))
    return Graph(tuple(sorted(vs)), tuple(sorted(canon)))


def family(kind: str, n: int) -> Graph:
    """Named graph on labels 1..n: path, cycle, complete, or star (center 1)."""
    if kind == "path":
        if n < 0:
            raise GraphError("path requires n >= 0")
        return make_graph(range(1, n + 1), [(i, i + 1) for i in range(1, n)])
    if kind == "complete":
        if n < 0:
            raise GraphError("complete requires n >= 0")
        return make_graph(range(1, n + 1), itertools.combinations(range(1, n + 1), 2))
    if kind == "cycle":
        if n < 3:
            raise GraphError("cycle requires n >= 3")
        return make_graph(range(1, n + 1), [(i, i % n + 1) for i in range(1, n + 1)])
    if kind == "star":
        if n < 1:
            raise GraphError("star requires n >= 1")
        return make_graph(range(1, n + 1), [(1, i) for i in range(2, n + 1)])
    raise GraphError(f"unknown family {kind!r}")


def parse_graph(spec: str | dict) -> Graph:
    """Accept family shorthand like "path:4" or a {"vertices":..., "edges":...} dict."""
    if isinstance(spec, dict):
        return make_graph(spec["vertices"], spec["edges"])
    kind, _, num = spec.partition(":")
    if not num:
        raise GraphError(f"graph shorthand must look like 'path:4', got {spec!r}")
    return family(kind, int(num))


# ---------------------------------------------------------------------------
# Bitmask plumbing.  Vertex i of g occupies bit position index(g)[i]; subsets
# of V are ints.  All derived structure is cached per graph value.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _bit_index(g: Graph) -> dict:
    return {v: i for i, v in enumerate(g.vertices)}

@lru_cache(maxsize=None)
def _edge_set(g: Graph) -> frozenset:
    return frozenset(g.edges)

@lru_cache(maxsize=None)
def _adjacency(g: Graph) -> tuple[int, ...]:
    """Neighbor mask per bit position."""
    idx = _bit_index(g)
    adj = [0] * g.n
    for a, b in g.edges:
        adj[idx[a]] |= 1 << idx[b]
        adj[idx[b]] |= 1 << idx[a]
    return tuple(adj)


def mask_of(g: Graph, subset: Iterable[int]) -> int:
    idx = _bit_index(g)
    m = 0
    for v in subset:
        if v not in idx:
            raise GraphError(f"{v} is not a vertex of {g!r}")
        m |= 1 << idx[v]
    return m


def labels_of(g: Graph, mask: int) -> tuple[int, ...]:
    return tuple(v for i, v in enumerate(g.vertices) if mask >> i & 1)


def connected_mask(g: Graph, mask: int) -> bool:
    """Is the induced subgraph on `mask` connected?  Empty mask counts as connected."""
    if mask == 0:
        return True
    adj = _adjacency(g)
    start = mask & -mask
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            f ^= b
            nxt |= adj[b.bit_length() - 1]
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def component_masks(g: Graph, mask: int) -> list[int]:
    """Connected components of the induced subgraph on `mask`, ordered by min bit."""
    adj = _adjacency(g)
    out = []
    rest = mask
    while rest:
        start = rest & -rest
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                f ^= b
                nxt |= adj[b.bit_length() - 1]
            nxt &= mask & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        rest &= ~comp
    return out


# ---------------------------------------------------------------------------
# Core operators.
# ---------------------------------------------------------------------------

def induced(g: Graph, subset: Iterable[int]) -> Graph:
    """Induced subgraph on `subset`."""
    vs = set(subset)
    for v in vs:
        if v not in _bit_index(g):
            raise GraphError(f"{v} is not a vertex of the host graph")
    return Graph(tuple(sorted(vs)), tuple(e for e in g.edges if e[0] in vs and e[1] in vs))


def reconnected_complement(g: Graph, subset: Iterable[int]) -> Graph:
    """Delete `subset`; join surviving vertices linked by a path through it.

    An edge (a, b) appears exactly when some path of g from a to b has all its
    internal vertices inside `subset`; original edges outside survive.
    """
    vmask = mask_of(g, subset)
    rest = [v for v in g.vertices if not vmask >> _bit_index(g)[v] & 1]
    adj = _adjacency(g)
    idx = _bit_index(g)
    edges = []
    for a, b in itertools.combinations(rest, 2):
        # reachability from a to b through vmask: flood within vmask | {a,b}
        allowed = vmask | 1 << idx[a] | 1 << idx[b]
        seen = 1 << idx[a]
        frontier = seen
        hit = False
        target = 1 << idx[b]
        while frontier and not hit:
            nxt = 0
            f = frontier
            while f:
                bbit = f & -f
                f ^= bbit
                nxt |= adj[bbit.bit_length() - 1]
            nxt &= allowed & ~seen
            if nxt & target:
                hit = True
            seen |= nxt
            frontier = nxt
        if hit:
            edges.append((a, b))
    return Graph(tuple(rest), tuple(sorted(edges)))


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    """Vertex sets of the components, each sorted, ordered by minimum element."""
    full = (1 << g.n) - 1
    return [labels_of(g, m) for m in component_masks(g, full)]


def is_connected(g: Graph) -> bool:
    return connected_mask(g, (1 << g.n) - 1)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Union of two graphs with disjoint label sets."""
    if set(g1.vertices) & set(g2.vertices):
        raise GraphError("label sets overlap")
    return make_graph(g1.vertices + g2.vertices, g1.edges + g2.edges)


def automorphisms(g: Graph, cap: int = 10) -> list[dict[int, int]]:
    """All adjacency-preserving vertex bijections, sorted by image tuple.

    Backtracking over degree-compatible images; `cap` guards the search.
    """
    if g.n > cap:
        raise CapExceededError(f"automorphism search capped at {cap} vertices")
    vs = g.vertices
    deg = {v: len(g.neighbors(v)) for v in vs}
    es = _edge_set(g)
    out: list[dict[int, int]] = []
    image: dict[int, int] = {}
    used: set[int] = set()

    def consistent(v: int, w: int) -> bool:
        for u in image:
            if ((min(u, v), max(u, v)) in es) != ((min(image[u], w), max(image[u], w)) in es):
                return False
        return True

    def extend(i: int) -> None:
        if i == len(vs):
            out.append(dict(image))
            return
        v = vs[i]
        for w in vs:
            if w in used or deg[w] != deg[v]:
                continue
            if consistent(v, w):
                image[v] = w
                used.add(w)
                extend(i + 1)
                del image[v]
                used.discard(w)

    extend(0)
    out.sort(key=lambda m: tuple(m[v] for v in vs))
    return out
