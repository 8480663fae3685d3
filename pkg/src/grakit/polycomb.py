"""Face counts of graph associahedra, h-polynomials, and toric Betti numbers.

Faces of the graph associahedron of a connected graph correspond to augmented
nested sets, a face of dimension i to a nested set of cardinality n - i.  The
h-polynomial is computed two independent ways: as the binomial transform of
the face vector and as the descent generating polynomial over the vertices of
the polytope.  All arithmetic is exact.
"""

from __future__ import annotations

from .graphs import Graph, NotConnectedError, is_connected
from .tubings import (
    DEFAULT_CAP,
    _check_host,
    _iter_maximal_masks,
    _nested_size_counts,
)

Polynomial = list[int]  # coefficient list, index = degree, trailing zeros trimmed


def trim(coeffs: list[int]) -> Polynomial:
    """Canonical polynomial: drop trailing zeros; zero polynomial is []."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def f_vector(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """Face numbers f_0..f_{n-1}; f_i counts nested sets of cardinality n - i,
    so f_{n-1} = 1 stands for the polytope itself."""
    _check_host(g, cap)
    n = g.n
    by_proper_count = _nested_size_counts(g)
    return [by_proper_count[n - 1 - i] for i in range(n)]


def h_poly_from_f(f: list[int]) -> Polynomial:
    """Coefficients of sum_i f_i (t-1)^i."""
    if not f:
        raise ValueError("f-vector must be nonempty")
    out = [0] * len(f)
    # (t-1)^i expanded by Pascal recursion
    binom = [1]
    for i, fi in enumerate(f):
        for j, c in enumerate(binom):
            out[j] += fi * c * (-1) ** (i - j)
        nxt = [1] * (len(binom) + 1)
        for j in range(1, len(binom)):
            nxt[j] = binom[j - 1] + binom[j]
        binom = nxt
    return trim(out)


def _descent_count(g: Graph, masks: tuple[int, ...]) -> int:
    """Descents of a maximal family given by its proper tube masks: pairs
    where a node's vertex is smaller than its parent's vertex.  Bit order
    agrees with label order, so bits compare like vertices."""
    nodes = list(masks) + [(1 << g.n) - 1]
    vertex = {}
    for t in nodes:
        lam = t
        for s in nodes:
            if s != t and s & t == s:
                lam &= ~s
        vertex[t] = lam.bit_length() - 1
    count = 0
    for t in masks:
        parent = min(
            (s for s in nodes if s != t and s & t == t),
            key=lambda s: s.bit_count(),
        )
        if vertex[t] < vertex[parent]:
            count += 1
    return count


def h_poly_from_descents(g: Graph, cap: int = DEFAULT_CAP) -> Polynomial:
    """Descent generating polynomial over the maximal augmented nested sets."""
    _check_host(g, cap)
    coeffs = [0] * g.n
    for masks in _iter_maximal_masks(g):
        coeffs[_descent_count(g, masks)] += 1
    return trim(coeffs)


def betti(g: Graph, cap: int = DEFAULT_CAP) -> list[int]:
    """Even Betti numbers of the toric variety of the graph associahedron:
    the h-coefficients, b_{2i} = h_i; odd Betti numbers vanish."""
    if not is_connected(g) or g.n == 0:
        raise NotConnectedError("Betti numbers require a nonempty connected graph")
    return h_poly_from_f(f_vector(g, cap))
