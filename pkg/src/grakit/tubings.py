"""Tubes, nested sets, nested trees, descents, and the two monomial orders.

A tube is a subset of vertices inducing a connected subgraph.  A nested set
is a family of tubes in which any two members are comparable by inclusion or
disjoint with a disconnected union; augmented nested sets also contain the
full vertex set.  Tubes are encoded as sorted vertex tuples and nested sets
as tuples of tubes sorted by (size, lexicographic), which makes equality
structural.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .graphs import (
    CapExceededError,
    Graph,
    NotConnectedError,
    _adjacency,
    connected_mask,
    induced,
    is_connected,
    labels_of,
    mask_of,
    reconnected_complement,
)

Tube = tuple[int, ...]

DEFAULT_CAP = 9


def _tube_key(t: Tube) -> tuple:
    return (len(t), t)


@dataclass(frozen=True)
class NestedSet:
    """A compatible family of tubes of a fixed host graph.

    The constructor trusts its input; use :func:`nested_set` to validate.
    """

    host: Graph
    tubes: tuple[Tube, ...]

    @property
    def augmented(self) -> bool:
        return self.host.vertices in self.tubes

    def __len__(self) -> int:
        return len(self.tubes)

    def __contains__(self, t: Tube) -> bool:
        return tuple(t) in self.tubes

    def to_json(self) -> dict:
        return {"tubes": [list(t) for t in self.tubes]}

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return "NestedSet{" + ", ".join(str(set(t)) for t in self.tubes) + "}"


def nested_set(host: Graph, tubes: Iterable[Iterable[int]]) -> NestedSet:
    """Validated, canonically sorted nested set."""
    ts = sorted({tuple(sorted(t)) for t in tubes}, key=_tube_key)
    bad = [t for t in ts if not _is_tube(host, t)]
    if bad:
        raise NotConnectedError(f"{bad[0]} is not a tube of the host")
    for a, b in itertools.combinations(ts, 2):
        if not _compatible(host, mask_of(host, a), mask_of(host, b)):
            raise ValueError(f"tubes {a} and {b} are not nested")
    return NestedSet(host, tuple(ts))


def nested_set_from_json(host: Graph, data: dict) -> NestedSet:
    return nested_set(host, data["tubes"])


# ---------------------------------------------------------------------------
# Tube enumeration and compatibility.
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _tube_masks(g: Graph) -> frozenset:
    """Masks of all tubes, the full set included."""
    return frozenset(
        m for m in range(1, 1 << g.n) if connected_mask(g, m)
    )


def _is_tube(g: Graph, t: Iterable[int]) -> bool:
    t = tuple(t)
    return bool(t) and mask_of(g, t) in _tube_masks(g)


def _compatible(g: Graph, a: int, b: int) -> bool:
    i = a & b
    if i == a or i == b:
        return True
    if i:
        return False
    return (a | b) not in _tube_masks(g)


def tubes(g: Graph, cap: int = DEFAULT_CAP) -> list[Tube]:
    """All tubes of a connected host, the full vertex set included,
    sorted by (size, lexicographic members)."""
    _check_host(g, cap)
    return sorted((labels_of(g, m) for m in _tube_masks(g)), key=_tube_key)


def proper_tubes(g: Graph, cap: int = DEFAULT_CAP) -> list[Tube]:
    """Tubes other than the full vertex set."""
    return [t for t in tubes(g, cap) if len(t) < g.n]


def is_nested(g: Graph, tube_family: Iterable[Iterable[int]]) -> bool:
    """Pairwise nestedness check; raises if a member is not a tube."""
    masks = []
    for t in tube_family:
        t = tuple(sorted(t))
        if not _is_tube(g, t):
            raise NotConnectedError(f"{t} is not a tube of the host")
        masks.append(mask_of(g, t))
    return all(
        _compatible(g, a, b) for a, b in itertools.combinations(masks, 2)
    )


def _check_host(g: Graph, cap: int) -> None:
    if g.n == 0:
        raise NotConnectedError("host graph must be nonempty")
    if not is_connected(g):
        raise NotConnectedError("host graph must be connected")
    if g.n > cap:
        raise CapExceededError(f"{g.n} vertices exceeds cap {cap}")


@lru_cache(maxsize=None)
def _compat_table(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Proper tube masks in ≺ order, plus per-tube bitsets of the
    compatible tubes with larger index."""
    tmasks = _tube_masks(g)
    order = sorted(
        (m for m in tmasks if m != (1 << g.n) - 1),
        key=lambda m: prec_key(labels_of(g, m)),
    )
    comp = [0] * len(order)
    for j in range(len(order)):
        for i in range(j + 1, len(order)):
            if _compatible(g, order[i], order[j]):
                comp[j] |= 1 << i
    return tuple(order), tuple(comp)


def _iter_nested_masks(g: Graph) -> Iterator[tuple[int, ...]]:
    """Backtracking enumeration over compatible families of proper tube
    masks, visiting tubes in ≺ order; the empty family comes first."""
    order, comp = _compat_table(g)
    chosen: list[int] = []

    def backtrack(allowed: int) -> Iterator[tuple[int, ...]]:
        yield tuple(chosen)
        a = allowed
        while a:
            low = a & -a
            a ^= low
            j = low.bit_length() - 1
            chosen.append(order[j])
            yield from backtrack(a & comp[j])
            chosen.pop()

    yield from backtrack((1 << len(order)) - 1)


def _nested_size_counts(g: Graph) -> list[int]:
    """counts[k] = number of compatible families of exactly k proper tubes."""
    order, comp = _compat_table(g)
    counts = [0] * (len(order) + 2)

    def walk(allowed: int, depth: int) -> None:
        counts[depth] += 1
        a = allowed
        while a:
            low = a & -a
            a ^= low
            walk(a & comp[low.bit_length() - 1], depth + 1)

    walk((1 << len(order)) - 1, 0)
    return counts


def _iter_maximal_masks(g: Graph) -> Iterator[tuple[int, ...]]:
    """Families of exactly n - 1 compatible proper tube masks, with
    branch-and-bound pruning on the remaining candidate count."""
    order, comp = _compat_table(g)
    need = g.n - 1
    chosen: list[int] = []

    def backtrack(allowed: int) -> Iterator[tuple[int, ...]]:
        if len(chosen) == need:
            yield tuple(chosen)
            return
        a = allowed
        while a and len(chosen) + a.bit_count() >= need:
            low = a & -a
            a ^= low
            j = low.bit_length() - 1
            chosen.append(order[j])
            yield from backtrack(a & comp[j])
            chosen.pop()

    yield from backtrack((1 << len(order)) - 1)


def enumerate_nested(
    g: Graph,
    augmented: bool,
    include_empty: bool = False,
    cap: int = DEFAULT_CAP,
) -> Iterator[NestedSet]:
    """Stream the nested set complex of g.

    With ``augmented`` the full vertex set is a member of every output.
    Without it, only proper tubes appear and the empty family is emitted
    only when ``include_empty`` is set.
    """
    _check_host(g, cap)
    full = g.vertices
    for masks in _iter_nested_masks(g):
        ts = sorted((labels_of(g, m) for m in masks), key=_tube_key)
        if augmented:
            yield NestedSet(g, tuple(ts) + (full,))
        elif ts or include_empty:
            yield NestedSet(g, tuple(ts))


def maximal_nested(g: Graph, cap: int = DEFAULT_CAP) -> list[NestedSet]:
    """Augmented nested sets of the maximal cardinality |V|."""
    _check_host(g, cap)
    full = g.vertices
    out = []
    for masks in _iter_maximal_masks(g):
        ts = sorted((labels_of(g, m) for m in masks), key=_tube_key)
        out.append(NestedSet(g, tuple(ts) + (full,)))
    return out


# ---------------------------------------------------------------------------
# Nested trees.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NestedTree:
    """Inclusion forest of an augmented nested set with node labels.

    The label of a node is the part of the node not covered by its children;
    labels partition the vertex set.
    """

    nested: NestedSet
    root: Tube
    parent: dict  # Tube -> Tube | None
    children: dict  # Tube -> tuple[Tube, ...]
    labels: dict  # Tube -> Tube

    def to_dot(self) -> str:
        lines = ["digraph nested_tree {", '  node [shape=box];']
        names = {t: f"n{i}" for i, t in enumerate(self.nested.tubes)}
        for t in self.nested.tubes:
            lab = "{" + ",".join(map(str, t)) + "} | λ={" + ",".join(map(str, self.labels[t])) + "}"
            lines.append(f'  {names[t]} [label="{lab}"];')
        for t in self.nested.tubes:
            p = self.parent[t]
            if p is not None:
                lines.append(f"  {names[p]} -> {names[t]};")
        lines.append("}")
        return "\n".join(lines)


@lru_cache(maxsize=100000)
def nested_tree(ns: NestedSet) -> NestedTree:
    """Tree of an augmented nested set under the cover relation of inclusion."""
    if not ns.augmented:
        raise ValueError("nested set must contain the full vertex set")
    parent: dict = {}
    children: dict = {t: [] for t in ns.tubes}
    sets = {t: frozenset(t) for t in ns.tubes}
    for t in ns.tubes:
        ups = [u for u in ns.tubes if sets[t] < sets[u]]
        if ups:
            p = min(ups, key=len)
            parent[t] = p
            children[p].append(t)
        else:
            parent[t] = None
    labels = {}
    for t in ns.tubes:
        covered = set().union(*(sets[c] for c in children[t])) if children[t] else set()
        labels[t] = tuple(sorted(sets[t] - covered))
    return NestedTree(
        nested=ns,
        root=ns.host.vertices,
        parent=parent,
        children={t: tuple(sorted(c, key=_tube_key)) for t, c in children.items()},
        labels=labels,
    )


def node_graph(ns: NestedSet, t: Tube) -> Graph:
    """The graph a node of the nested tree carries: the induced subgraph on
    the tube with the union of its children reconnected away; its vertex set
    is the node label."""
    tree = nested_tree(ns)
    t = tuple(t)
    covered = set(t) - set(tree.labels[t])
    return reconnected_complement(induced(ns.host, t), covered)


def descents(ns: NestedSet) -> set[tuple[int, int]]:
    """Pairs (v, w) with v < w whose node for v is a child of the node for w.

    Requires a maximal augmented nested set, so every label is a singleton
    and vertices name tree nodes.
    """
    if len(ns) != ns.host.n:
        raise ValueError("descents require a maximal nested set")
    tree = nested_tree(ns)
    vertex_of = {t: tree.labels[t][0] for t in ns.tubes}
    out = set()
    for t in ns.tubes:
        p = tree.parent[t]
        if p is None:
            continue
        v, w = vertex_of[t], vertex_of[p]
        if v < w:
            out.add((v, w))
    return out


# ---------------------------------------------------------------------------
# The subset order ≺ and the nested-set order ◁.
# ---------------------------------------------------------------------------

def prec_key(subset: Iterable[int]) -> tuple[int, ...]:
    """Sort key realizing ≺: negate the ascending member sequence.

    Comparing keys lexicographically puts a set before another when its
    sequence is an initial segment of the other's, or is lexicographically
    greater at the first difference.
    """
    return tuple(-v for v in sorted(subset))


def subset_precedes(a: Iterable[int], b: Iterable[int]) -> bool:
    """Strict order ≺ on vertex subsets; extends proper inclusion."""
    return prec_key(a) < prec_key(b)


def nested_lex_less(t1: NestedSet, t2: NestedSet) -> bool:
    """Strict total order ◁ on equal-cardinality nested sets of one host.

    Compare unions under ≺; on a tie, delete the ≺-maximal tube from each
    side and recurse.  Equal nested sets compare false.
    """
    if t1.host != t2.host:
        raise ValueError("nested sets must share a host")
    if len(t1) != len(t2):
        raise ValueError("nested sets must have equal cardinality")
    a = list(t1.tubes)
    b = list(t2.tubes)
    while a:
        ua = sorted(set().union(*map(set, a)))
        ub = sorted(set().union(*map(set, b)))
        if ua != ub:
            return subset_precedes(ua, ub)
        a.remove(max(a, key=prec_key))
        b.remove(max(b, key=prec_key))
    return False


def lex_key(ns: NestedSet) -> tuple:
    """Sort key compatible with ◁ on equal-cardinality nested sets: the
    sequence of union keys along the tie-break recursion."""
    a = list(ns.tubes)
    keys = []
    while a:
        keys.append(prec_key(set().union(*map(set, a))))
        a.remove(max(a, key=prec_key))
    return tuple(keys)


# ---------------------------------------------------------------------------
# Quadratic divisors and tube insertion.
# ---------------------------------------------------------------------------

def quadratic_divisor(ns: NestedSet, t: Tube) -> tuple[Graph, Tube]:
    """Two-node subquotient of a nested set at a non-root tube.

    For t with parent p, returns the graph on label(p) ∪ label(t) obtained
    from the induced subgraph on p by reconnecting everything else away,
    together with the tube label(t) of that graph.
    """
    t = tuple(t)
    if t not in ns.tubes:
        raise ValueError(f"{t} is not a member of the nested set")
    if t == ns.host.vertices:
        raise ValueError("the root has no quadratic divisor")
    tree = nested_tree(ns)
    p = tree.parent[t]
    keep = set(tree.labels[p]) | set(tree.labels[t])
    delta = reconnected_complement(induced(ns.host, p), set(p) - keep)
    return delta, tree.labels[t]


def lift_node_tube(ns: NestedSet, t: Tube, node_tube: Iterable[int]) -> Tube:
    """Tube of the host corresponding to a tube of the node graph at t.

    The lift is the smallest host tube meeting label(t) exactly in
    ``node_tube`` and compatible with the children of t: it absorbs every
    child adjacent to the growing set (a child left outside a tube must not
    touch it).  Absorption by adjacency, not by connectivity of the union,
    matters when the node tube has several pieces bridged by distinct
    children.
    """
    tree = nested_tree(ns)
    g = ns.host
    adj = _adjacency(g)
    x = mask_of(g, node_tube)
    ch = [mask_of(g, c) for c in tree.children[tuple(t)]]
    changed = True
    while changed:
        changed = False
        nbrs = 0
        m = x
        while m:
            low = m & -m
            m ^= low
            nbrs |= adj[low.bit_length() - 1]
        for c in ch:
            if x & c != c and nbrs & c:
                x |= c
                changed = True
    return labels_of(g, x)


def node_insertions(ns: NestedSet, t: Tube) -> list[tuple[Tube, Tube]]:
    """All one-tube refinements available at a node: pairs of
    (proper tube of the node graph, its lift into the host)."""
    delta = node_graph(ns, tuple(t))
    out = []
    for s in proper_tubes(delta, cap=max(DEFAULT_CAP, delta.n)):
        out.append((s, lift_node_tube(ns, t, s)))
    return out
