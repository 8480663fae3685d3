"""Cellular chains of graph associahedra as a cobar-type complex, plus the
monomial machinery: leading terms, normal monomials, and the reduction and
induction maps between maximal nested sets and normal monomials.

Monomials of the free structure with one generator per connected graph are
encoded by augmented nested sets, a generator sitting at each node of the
nested tree; the homological degree of a monomial is n minus its cardinality.
A quadratic divisor of a monomial is the two-node subquotient at a tree edge,
so divisibility questions reduce to per-graph sets of leading weight-two
monomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .engine import (
    RelationSet,
    free_weight2_basis,
    gravity_relations,
    hypercom_relations,
)
from .exactla import ChainComplex, QMatrix, homology_dims
from .graphs import Graph, labels_of, mask_of
from .tubings import (
    DEFAULT_CAP,
    NestedSet,
    Tube,
    _check_host,
    _tube_key,
    _tube_masks,
    enumerate_nested,
    lex_key,
    nested_tree,
    node_graph,
    node_insertions,
    prec_key,
    quadratic_divisor,
)

SYSTEMS = ("grcom", "grav", "hyper")


# ---------------------------------------------------------------------------
# The cobar-type complex: cellular chains of the graph associahedron.
# ---------------------------------------------------------------------------

def _separation_sign(vd: tuple[int, ...], s: Tube) -> int:
    """Koszul sign separating the odd factors of s to the back of the
    ascending tensor over vd: parity of pairs (t in s) < (c outside s)."""
    sset = set(s)
    inv = sum(1 for t in s for c in vd if c not in sset and t < c)
    return -1 if inv % 2 else 1


def _reorder_sign(items: list[tuple[tuple, int]]) -> int:
    """Sign sorting (key, degree) items by key: each transposition of two
    odd-degree items contributes -1."""
    arr = list(items)
    sign = 1
    for i in range(len(arr)):
        for j in range(len(arr) - 1 - i):
            if arr[j][0] > arr[j + 1][0]:
                if arr[j][1] % 2 and arr[j + 1][1] % 2:
                    sign = -sign
                arr[j], arr[j + 1] = arr[j + 1], arr[j]
    return sign


@lru_cache(maxsize=200000)
def boundary(ns: NestedSet) -> dict:
    """Differential of a monomial: signed sum over all one-tube refinements.

    At a node with graph D and an inserted proper tube S, the local sign is
    -(-1)^(|V_D| - |S|) times the separation sign of S in D; the global sign
    combines the Koszul prefix over the nodes preceding the refined one in
    canonical order with the reordering of the two new nodes into canonical
    position.  The convention is pinned by the squared differential
    vanishing; the complex it defines has the homology of a point.
    """
    g = ns.host
    tree = nested_tree(ns)
    nodes = list(ns.tubes)  # canonical (size, lex) order
    degs = [len(tree.labels[t]) - 1 for t in nodes]
    out: dict = {}
    for i, t in enumerate(nodes):
        if degs[i] == 0:
            continue
        delta = node_graph(ns, t)
        prefix = -1 if sum(degs[:i]) % 2 else 1
        for s, lifted in node_insertions(ns, t):
            local = -((-1) ** (delta.n - len(s))) * _separation_sign(delta.vertices, s)
            items = []
            for j, u in enumerate(nodes):
                if j == i:
                    items.append((_tube_key(u), delta.n - len(s) - 1))
                    items.append((_tube_key(lifted), len(s) - 1))
                else:
                    items.append((_tube_key(u), degs[j]))
            coeff = prefix * local * _reorder_sign(items)
            ns2 = NestedSet(g, tuple(sorted(ns.tubes + (lifted,), key=_tube_key)))
            out[ns2] = out.get(ns2, 0) + coeff
            if not out[ns2]:
                del out[ns2]
    return out


@dataclass(frozen=True, eq=False)
class CobarComplex:
    """Chain model of a graph associahedron: degree-d basis indexed by the
    augmented nested sets of cardinality n - d."""

    host: Graph
    basis: dict  # degree -> list[NestedSet], each list sorted ascending by lex order

    def __post_init__(self):
        # squared-differential gate, checked sparsely on construction
        for deg in sorted(self.basis):
            for ns in self.basis[deg]:
                acc: dict = {}
                for m1, c1 in boundary(ns).items():
                    for m2, c2 in boundary(m1).items():
                        acc[m2] = acc.get(m2, 0) + c1 * c2
                if any(acc.values()):
                    raise ValueError(f"squared differential is nonzero on {ns}")

    @property
    def dims(self) -> dict:
        return {d: len(b) for d, b in self.basis.items()}

    def differential_matrix(self, k: int) -> QMatrix:
        """Matrix of the boundary from degree k to degree k-1."""
        dom = self.basis.get(k, [])
        cod = self.basis.get(k - 1, [])
        index = {ns: i for i, ns in enumerate(cod)}
        rows = [[Fraction(0)] * len(dom) for _ in cod]
        for j, ns in enumerate(dom):
            for m, c in boundary(ns).items():
                rows[index[m]][j] = Fraction(c)
        return QMatrix(len(cod), len(dom), tuple(tuple(r) for r in rows))

    def chain_complex(self) -> ChainComplex:
        dims = self.dims
        diffs = {k: self.differential_matrix(k) for k in dims if k - 1 in dims}
        return ChainComplex(dims, diffs)


def cobar_complex(g: Graph, cap: int = DEFAULT_CAP) -> CobarComplex:
    """Build the complex over a connected host; degree of a monomial is
    n minus its cardinality."""
    _check_host(g, cap)
    by_degree: dict = {}
    for ns in enumerate_nested(g, augmented=True, cap=cap):
        by_degree.setdefault(g.n - len(ns), []).append(ns)
    for d in by_degree:
        by_degree[d].sort(key=lex_key)
    return CobarComplex(g, by_degree)


def koszul_check(g: Graph, cap: int = DEFAULT_CAP) -> dict:
    """Homology dimensions of the complex; a point in degree zero certifies
    the quadratic presentation is as small as it can be."""
    return homology_dims(cobar_complex(g, cap).chain_complex())


# ---------------------------------------------------------------------------
# Leading terms and normal monomials.
# ---------------------------------------------------------------------------

def leading_term(
    vector, basis: list[NestedSet], ordering: str = "lex"
) -> NestedSet:
    """Monomial of the largest nonzero coefficient under the nested-set
    order ("lex"), or the smallest ("opposite")."""
    if ordering not in ("lex", "opposite"):
        raise ValueError(f"unknown ordering {ordering!r}")
    support = [ns for ns, c in zip(basis, vector) if c]
    if not support:
        raise ValueError("zero vector has no leading term")
    pick = max if ordering == "lex" else min
    return pick(support, key=lex_key)


def _pivot_tubes(relations: RelationSet, ordering: str) -> frozenset:
    """Leading tubes of the span of a weight-two relation set: eliminate in
    the chosen order and read off the pivot monomials."""
    basis = list(relations.basis)
    order = sorted(range(len(basis)), key=lambda i: lex_key(basis[i]),
                   reverse=(ordering == "lex"))
    pivots: dict = {}
    for vec in relations.vectors:
        row = list(vec)
        while True:
            lead = next((i for i in order if row[i]), None)
            if lead is None:
                break
            if lead in pivots:
                c = row[lead] / pivots[lead][lead]
                row = [a - c * b for a, b in zip(row, pivots[lead])]
            else:
                pivots[lead] = row
                break
    return frozenset(basis[i].tubes[0] for i in pivots)


@lru_cache(maxsize=None)
def weight2_leading_tubes(g: Graph, system: str) -> frozenset:
    """Tubes T whose weight-two monomial {T, V} is a leading term of the
    system's relation ideal on g.

    grcom: all proper tubes except the order-minimal one (the relations
    identify all weight-two monomials).
    grav: pivots of the relation span under the nested-set order; these
    come out as the non-singleton proper tubes plus the minimal-vertex
    singleton.
    hyper: the tubes all of whose outside neighbors exceed their maximum.
    The reversed-order pivot computation yields a set of the same size whose
    normal-monomial count agrees, but only this set is compatible with the
    reduction map, so it is the one divisibility uses.
    """
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    if g.n < 2:
        return frozenset()
    if system == "grav":
        return _pivot_tubes(gravity_relations(g), "lex")
    if system == "hyper":
        tset = _tube_masks(g)
        full = (1 << g.n) - 1
        out = []
        for m in tset:
            if m == full:
                continue
            t = labels_of(g, m)
            nbrs = [
                w for w in g.vertices
                if not m >> _bit(g, w) & 1 and (m | 1 << _bit(g, w)) in tset
            ]
            if all(w > t[-1] for w in nbrs):
                out.append(t)
        return frozenset(out)
    # grcom: identify every pair of weight-two monomials
    basis = [ns.tubes[0] for ns in free_weight2_basis(g)]
    if len(basis) <= 1:
        return frozenset()
    keep = min(basis, key=prec_key)
    return frozenset(t for t in basis if t != keep)


def _bit(g: Graph, v: int) -> int:
    return g.vertices.index(v)


def hyper_leading_tubes_by_order(g: Graph) -> frozenset:
    """Pivots of the hypercommutative relation span under the reversed
    nested-set order; kept alongside the reduction-compatible set so the two
    can be compared."""
    if g.n < 2:
        return frozenset()
    return _pivot_tubes(hypercom_relations(g), "opposite")


def is_normal(ns: NestedSet, system: str) -> bool:
    """No quadratic divisor of the monomial is a leading term of the system."""
    full = ns.host.vertices
    if system == "grcom" and len(ns) != ns.host.n:
        return False
    for t in ns.tubes:
        if t == full:
            continue
        delta, tube = quadratic_divisor(ns, t)
        if tube in weight2_leading_tubes(delta, system):
            return False
    return True


def normal_monomials(g: Graph, system: str, cap: int = DEFAULT_CAP) -> list[NestedSet]:
    """Monomials with no leading quadratic divisor, in the deterministic
    enumeration order.  The grcom system has one generator only on the
    one-vertex graph, so its monomials are the maximal nested sets."""
    if system not in SYSTEMS:
        raise ValueError(f"unknown system {system!r}; expected one of {SYSTEMS}")
    out = []
    for ns in enumerate_nested(g, augmented=True, cap=cap):
        if system == "grcom" and len(ns) != g.n:
            continue
        if is_normal(ns, system):
            out.append(ns)
    return out


# ---------------------------------------------------------------------------
# Reduction and induction.
# ---------------------------------------------------------------------------

def reduction(ns: NestedSet) -> NestedSet:
    """Drop, from a maximal nested set, every node whose vertex is smaller
    than its parent's vertex.  The result always contains the root."""
    if len(ns) != ns.host.n:
        raise ValueError("reduction requires a maximal nested set")
    tree = nested_tree(ns)
    vertex_of = {t: tree.labels[t][0] for t in ns.tubes}
    drop = set()
    for t in ns.tubes:
        p = tree.parent[t]
        if p is not None and vertex_of[t] < vertex_of[p]:
            drop.add(t)
    return NestedSet(ns.host, tuple(t for t in ns.tubes if t not in drop))


def induction(ns: NestedSet) -> NestedSet:
    """Complete an augmented nested set to a maximal one.

    While some node label has more than one vertex, take an inclusion-maximal
    such node, its minimal label vertex v, and insert the smallest compatible
    tube containing v: the union of v with the children adjacent to it.
    """
    g = ns.host
    if not ns.augmented:
        raise ValueError("induction requires an augmented nested set")
    tset = _tube_masks(g)
    current = ns
    while len(current) < g.n:
        tree = nested_tree(current)
        big = [t for t in current.tubes if len(tree.labels[t]) > 1]
        maximal = [t for t in big if not any(set(t) < set(u) for u in big)]
        t = max(maximal, key=_tube_key)
        v = min(tree.labels[t])
        vmask = 1 << _bit(g, v)
        new = vmask
        for c in tree.children[t]:
            cmask = mask_of(g, c)
            if (cmask | vmask) in tset:
                new |= cmask
        lifted = labels_of(g, new)
        current = NestedSet(g, tuple(sorted(current.tubes + (lifted,), key=_tube_key)))
    return current
