"""Shared corpus fixtures and independent oracles.

The isomorphism-class corpus is generated by vertex extension with dedup on
the brute-force canonical form (minimum relabeled edge list over all
permutations), so it is independent of the library's graph machinery.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache

import pytest

from grakit import Graph, is_connected, make_graph


# ---------------------------------------------------------------------------
# Corpus: connected isomorphism classes and random graphs.
# ---------------------------------------------------------------------------

def canonical_edges(n: int, edges) -> tuple:
    best = None
    verts = range(1, n + 1)
    for p in itertools.permutations(verts):
        m = dict(zip(verts, p))
        key = tuple(sorted((min(m[a], m[b]), max(m[a], m[b])) for a, b in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple:
    """Isomorphism classes of all (not necessarily connected) graphs on
    vertices 1..n, as canonical edge tuples."""
    if n == 1:
        return ((),)
    out = {}
    for e in _all_classes(n - 1):
        for bits in range(2 ** (n - 1)):
            edges = tuple(e) + tuple(
                (v, n) for v in range(1, n) if bits >> (v - 1) & 1
            )
            out[canonical_edges(n, edges)] = None
    return tuple(out)


@lru_cache(maxsize=None)
def connected_classes(n: int) -> tuple:
    """All connected isomorphism classes on exactly n vertices."""
    out = []
    for e in _all_classes(n):
        g = make_graph(range(1, n + 1), e)
        if is_connected(g):
            out.append(g)
    return tuple(out)


def connected_classes_upto(n: int) -> list[Graph]:
    return [g for k in range(1, n + 1) for g in connected_classes(k)]


def random_connected_graphs(n: int, count: int, seed: int, p: float = 0.5) -> list[Graph]:
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        edges = [
            (i, j)
            for i in range(1, n + 1)
            for j in range(i + 1, n + 1)
            if rng.random() < p
        ]
        g = make_graph(range(1, n + 1), edges)
        if is_connected(g):
            out.append(g)
    return out


@pytest.fixture(scope="session")
def classes_upto_4():
    return connected_classes_upto(4)


@pytest.fixture(scope="session")
def classes_upto_5():
    return connected_classes_upto(5)


@pytest.fixture(scope="session")
def classes_upto_6():
    return connected_classes_upto(6)


@pytest.fixture(scope="session")
def random_sevens():
    return random_connected_graphs(7, 100, seed=70317)


# ---------------------------------------------------------------------------
# Independent oracles (kept free of the library's internal helpers).
# ---------------------------------------------------------------------------

def oracle_connected(vertices, edges) -> bool:
    """Union-find connectivity."""
    vertices = list(vertices)
    if not vertices:
        return True
    up = {v: v for v in vertices}

    def find(v):
        while up[v] != v:
            up[v] = up[up[v]]
            v = up[v]
        return v

    for a, b in edges:
        up[find(a)] = find(b)
    roots = {find(v) for v in vertices}
    return len(roots) == 1


def oracle_tubes(g: Graph) -> set:
    """Powerset filtered by the union-find connectivity oracle."""
    out = set()
    for r in range(1, g.n + 1):
        for sub in itertools.combinations(g.vertices, r):
            inner = [e for e in g.edges if e[0] in sub and e[1] in sub]
            if oracle_connected(sub, inner):
                out.add(sub)
    return out


def oracle_reconnected_edges(g: Graph, removed) -> set:
    """Edges of the reconnected complement, by enumerating simple paths whose
    internal vertices stay inside the removed set."""
    removed = set(removed)
    rest = [v for v in g.vertices if v not in removed]
    adj = {v: set() for v in g.vertices}
    for a, b in g.edges:
        adj[a].add(b)
        adj[b].add(a)
    out = set()
    for a, b in itertools.combinations(rest, 2):
        found = False
        for r in range(len(removed) + 1):
            for inner in itertools.permutations(sorted(removed), r):
                walk = (a,) + inner + (b,)
                if all(walk[i + 1] in adj[walk[i]] for i in range(len(walk) - 1)):
                    found = True
                    break
            if found:
                break
        if found:
            out.add((a, b))
    return out


def oracle_automorphisms(g: Graph) -> list[dict]:
    """All n! permutations, filtered by edge preservation."""
    es = {frozenset(e) for e in g.edges}
    out = []
    for p in itertools.permutations(g.vertices):
        m = dict(zip(g.vertices, p))
        if {frozenset((m[a], m[b])) for a, b in g.edges} == es:
            out.append(m)
    return out
