"""Computable reconnectads: graded commutative models, the square-zero
derivation, gravity elements, weight-two relation spaces, and axiom checks.

A reconnectad assigns a value to every connected graph together with
structure maps composing data on a reconnected complement with data on the
removed part.  The models here are the commutative reconnectads of a graded
object X with one basis generator per listed degree: a basis element over a
graph picks one generator per vertex, and every structure map merges
per-vertex factors.  The Koszul sign of a merge counts the pairs of
odd-degree factors that are out of ascending vertex order; this single
convention fixes all signs, and is validated by the derivation squaring to
zero and by the axiom suite.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .exactla import QMatrix, rank
from .graphs import (
    Graph,
    NotConnectedError,
    automorphisms,
    component_masks,
    induced,
    is_connected,
    labels_of,
    mask_of,
    reconnected_complement,
)
from .tubings import DEFAULT_CAP, NestedSet, prec_key, proper_tubes

# An element of a graded-product model over a graph is a dict mapping
# assignments (one generator index per vertex, in ascending vertex order)
# to nonzero rational coefficients.
Assignment = tuple[int, ...]
Element = dict


def _clean(terms: Element) -> Element:
    return {k: v for k, v in terms.items() if v}


def _scaled(terms: Element, c: Fraction) -> Element:
    return {k: c * v for k, v in terms.items()} if c else {}


def _added(x: Element, y: Element, s: int = 1) -> Element:
    out = dict(x)
    for k, v in y.items():
        out[k] = out.get(k, Fraction(0)) + s * v
    return _clean(out)


@dataclass(frozen=True)
class GrComX:
    """Commutative reconnectad of a graded object with one generator in each
    degree of ``generator_degrees``.

    ``reorder`` selects the target order used when merging tensor factors;
    anything but "ascending" produces a deliberately inconsistent variant
    for negative-control tests.
    """

    generator_degrees: tuple[int, ...]
    reorder: str = "ascending"

    def basis(self, g: Graph) -> list[Assignment]:
        return [
            tuple(a)
            for a in itertools.product(range(len(self.generator_degrees)), repeat=g.n)
        ]

    def dimension(self, g: Graph) -> int:
        return len(self.generator_degrees) ** g.n

    def degree(self, assignment: Assignment) -> int:
        return sum(self.generator_degrees[i] for i in assignment)

    def _merge_sign(self, seq: list[tuple[int, int]]) -> int:
        """seq lists (vertex, degree) in concatenation order; the sign sorts
        the odd-degree factors into the target vertex order."""
        odd = [v for v, d in seq if d % 2]
        if self.reorder == "ascending":
            inv = sum(
                1
                for i in range(len(odd))
                for j in range(i + 1, len(odd))
                if odd[i] > odd[j]
            )
        else:
            inv = sum(
                1
                for i in range(len(odd))
                for j in range(i + 1, len(odd))
                if odd[i] < odd[j]
            )
        return -1 if inv % 2 else 1

    def compose(self, g: Graph, v: tuple[int, ...], outer: Element, parts: list[Element]) -> Element:
        """Structure map at a vertex subset v: outer lives on the reconnected
        complement, one inner factor per component of the induced subgraph on
        v, components ordered by minimum vertex."""
        vmask = mask_of(g, v)
        comps = [labels_of(g, m) for m in component_masks(g, vmask)]
        if len(comps) != len(parts):
            raise ValueError(f"expected {len(comps)} inner factors, got {len(parts)}")
        rest = [u for u in g.vertices if u not in set(v)]
        out: Element = {}
        for combo in itertools.product(outer.items(), *[p.items() for p in parts]):
            (so, co), *inner = combo
            coeff = co
            by_vertex = dict(zip(rest, so))
            seq = [(u, self.generator_degrees[i]) for u, i in zip(rest, so)]
            for (si, ci), comp in zip(inner, comps):
                coeff *= ci
                by_vertex.update(zip(comp, si))
                seq += [(u, self.generator_degrees[i]) for u, i in zip(comp, si)]
            key = tuple(by_vertex[u] for u in g.vertices)
            out[key] = out.get(key, Fraction(0)) + self._merge_sign(seq) * coeff
        return _clean(out)

    def circ(self, g: Graph, t: tuple[int, ...], x: Element, y: Element) -> Element:
        """Tube composition: x on the reconnected complement, y on the tube."""
        return self.compose(g, tuple(t), x, [y]) if t else self.compose(g, (), x, [])

    def relabel(self, g: Graph, alpha: dict, x: Element) -> Element:
        """Push an element along a vertex bijection, with the Koszul sign of
        permuting the odd factors."""
        out: Element = {}
        for assignment, c in x.items():
            pairs = sorted(
                ((alpha[u], i) for u, i in zip(g.vertices, assignment)),
            )
            images = [alpha[u] for u, i in zip(g.vertices, assignment)
                      if self.generator_degrees[i] % 2]
            inv = sum(
                1
                for i in range(len(images))
                for j in range(i + 1, len(images))
                if images[i] > images[j]
            )
            key = tuple(i for _, i in pairs)
            out[key] = out.get(key, Fraction(0)) + (-1 if inv % 2 else 1) * c
        return _clean(out)

    def unit(self) -> Element:
        """The basis element over the empty graph."""
        return {(): Fraction(1)}


GRCOM = GrComX((0,))
GRGERST = GrComX((0, 1))
BROKEN_GERST = GrComX((0, 1), reorder="descending")


def grcom_x_compose(
    x_degrees: tuple[int, ...],
    g: Graph,
    v: tuple[int, ...],
    outer: Element,
    parts: list[Element],
) -> Element:
    """Composition in the commutative reconnectad of the graded object with
    one generator per degree in ``x_degrees``."""
    return GrComX(tuple(x_degrees)).compose(g, tuple(v), outer, parts)


# ---------------------------------------------------------------------------
# The square-zero model: generators m (degree 0) and b (degree 1) per vertex.
# Elements are recorded by the set of vertices carrying b.
# ---------------------------------------------------------------------------

@dataclass
class GerstElement:
    """Exact-rational combination of subset-indexed basis elements.

    ``terms`` maps the sorted tuple of b-carrying vertices to a nonzero
    coefficient; the homological degree of a basis element is the subset
    size.
    """

    host: Graph
    terms: dict

    def __post_init__(self):
        vs = set(self.host.vertices)
        cleaned = {}
        for s, c in self.terms.items():
            s = tuple(sorted(s))
            if not set(s) <= vs:
                raise ValueError(f"{s} is not a vertex subset of the host")
            if c:
                cleaned[s] = Fraction(c)
        self.terms = cleaned

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int | None:
        """Common degree of the support, or None if inhomogeneous or zero."""
        degs = {len(s) for s in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def __add__(self, other: "GerstElement") -> "GerstElement":
        if other.host != self.host:
            raise ValueError("hosts differ")
        return GerstElement(self.host, _added(self.terms, other.terms))

    def __sub__(self, other: "GerstElement") -> "GerstElement":
        if other.host != self.host:
            raise ValueError("hosts differ")
        return GerstElement(self.host, _added(self.terms, other.terms, s=-1))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GerstElement)
            and self.host == other.host
            and self.terms == other.terms
        )


def _assignment_of(g: Graph, s: tuple[int, ...]) -> Assignment:
    sset = set(s)
    return tuple(1 if u in sset else 0 for u in g.vertices)


def _subset_of(g: Graph, assignment: Assignment) -> tuple[int, ...]:
    return tuple(u for u, i in zip(g.vertices, assignment) if i)


def _to_element(x: GerstElement) -> Element:
    return {_assignment_of(x.host, s): c for s, c in x.terms.items()}


def _from_element(g: Graph, e: Element) -> GerstElement:
    return GerstElement(g, {_subset_of(g, a): c for a, c in e.items()})


def gerst_basis_element(g: Graph, s: tuple[int, ...]) -> GerstElement:
    return GerstElement(g, {tuple(sorted(s)): Fraction(1)})


def gerst_unit(g: Graph) -> GerstElement:
    """The degree-zero generator product m over every vertex."""
    return GerstElement(g, {(): Fraction(1)})


def gerst_circ(g: Graph, t: tuple[int, ...], x: GerstElement, y: GerstElement) -> GerstElement:
    """Tube composition in the square-zero model."""
    return _from_element(g, GRGERST.circ(g, tuple(t), _to_element(x), _to_element(y)))


def gerst_relabel(alpha: dict, x: GerstElement) -> GerstElement:
    """Push an element along a vertex bijection of its host."""
    g = x.host
    target = Graph(
        tuple(sorted(alpha[u] for u in g.vertices)),
        tuple(sorted(tuple(sorted((alpha[a], alpha[b]))) for a, b in g.edges)),
    )
    moved = GRGERST.relabel(g, alpha, _to_element(x))
    return _from_element(target, moved)


def gerst_dimension(g: Graph) -> int:
    """Size of the subset-indexed basis: 2^n."""
    return len(GRGERST.basis(g))


def gerst_decomposition_count(g: Graph) -> int:
    """Number of summands in the underlying reconnected-product splitting,
    one one-dimensional summand per vertex subset."""
    return sum(
        1 for r in range(g.n + 1) for _ in itertools.combinations(g.vertices, r)
    )


def derivation(x: GerstElement) -> GerstElement:
    """Degree-1 derivation sending m to b at each vertex; squares to zero.

    On a basis element the sign at vertex v is (-1)^(number of b-factors
    before v in ascending vertex order).
    """
    g = x.host
    out: dict = {}
    for s, c in x.terms.items():
        sset = set(s)
        for v in g.vertices:
            if v in sset:
                continue
            sgn = -1 if sum(1 for u in s if u < v) % 2 else 1
            key = tuple(sorted(sset | {v}))
            out[key] = out.get(key, Fraction(0)) + sgn * c
    return GerstElement(g, out)


def gerst_derivation_matrix(g: Graph, k: int) -> QMatrix:
    """Matrix of the derivation from degree k to degree k+1, bases ordered
    lexicographically by subset."""
    if not 0 <= k <= g.n:
        raise ValueError(f"degree {k} out of range 0..{g.n}")
    dom = list(itertools.combinations(g.vertices, k))
    cod = list(itertools.combinations(g.vertices, k + 1))
    index = {s: i for i, s in enumerate(cod)}
    rows = [[Fraction(0)] * len(dom) for _ in cod]
    for j, s in enumerate(dom):
        img = derivation(gerst_basis_element(g, s))
        for t, c in img.terms.items():
            rows[index[t]][j] = c
    return QMatrix(len(cod), len(dom), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class GravityDims:
    by_degree: dict
    total: int


def gravity_dims(g: Graph) -> GravityDims:
    """Per-degree kernel dimension of the derivation; the total is 2^(n-1)."""
    _require_connected(g)
    by_degree = {}
    for k in range(g.n + 1):
        m = gerst_derivation_matrix(g, k)
        by_degree[k] = m.cols - rank(m)
    return GravityDims(by_degree, sum(by_degree.values()))


def gravity_generator(g: Graph) -> GerstElement:
    """Image of the degree-zero generator under the derivation: the sum of
    all singleton basis elements.  It lies in the kernel of the derivation."""
    _require_connected(g)
    return derivation(gerst_unit(g))


def _lambda_circ_vertex(g: Graph, v: int) -> GerstElement:
    """Composition of the gravity generator of g with the vertex v removed
    against the degree-one generator at v."""
    gs = reconnected_complement(g, (v,))
    outer = gravity_generator(gs) if gs.n else GerstElement(gs, {(): Fraction(1)})
    inner = gerst_basis_element(induced(g, (v,)), (v,))
    return gerst_circ(g, (v,), outer, inner)


@dataclass(frozen=True)
class GravityRelationReport:
    host: Graph
    tube_results: tuple  # ((tube, holds), ...) for tubes of size 2..n-1
    total_holds: bool    # the full-graph sum vanishes

    @property
    def all_hold(self) -> bool:
        return self.total_holds and all(ok for _, ok in self.tube_results)


def check_gravity_relations(g: Graph) -> GravityRelationReport:
    """Exact check of the gravity relations inside the square-zero model.

    For every tube T with 2 <= |T| < n, the sum over v in T of the one-vertex
    compositions equals the single composition at T; the sum over all
    vertices vanishes.
    """
    _require_connected(g)
    if g.n < 2:
        raise ValueError("relations need at least two vertices")
    results = []
    for t in proper_tubes(g):
        if len(t) < 2:
            continue
        lhs = GerstElement(g, {})
        for v in t:
            lhs = lhs + _lambda_circ_vertex(g, v)
        gs = reconnected_complement(g, t)
        rhs = gerst_circ(g, t, gravity_generator(gs), gravity_generator(induced(g, t)))
        results.append((t, lhs == rhs))
    total = GerstElement(g, {})
    for v in g.vertices:
        total = total + _lambda_circ_vertex(g, v)
    return GravityRelationReport(g, tuple(results), total.is_zero())


# ---------------------------------------------------------------------------
# Weight-two relation spaces over the free one-generator-per-graph basis.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RelationSet:
    """Rational relation vectors over the weight-two monomial basis of a
    fixed host; each basis monomial is the two-tube nested set {T, V}."""

    host: Graph
    basis: tuple  # tuple[NestedSet, ...]
    vectors: tuple  # tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if any(len(v) != len(self.basis) for v in self.vectors):
            raise ValueError("vector length does not match basis size")

    @property
    def basis_tubes(self) -> tuple:
        return tuple(ns.tubes[0] for ns in self.basis)

    def span_dim(self) -> int:
        if not self.vectors:
            return 0
        return rank(QMatrix.from_rows(self.vectors, cols=len(self.basis)))


def free_weight2_basis(g: Graph, cap: int = DEFAULT_CAP) -> list[NestedSet]:
    """Weight-two monomials: one per proper tube T, the shape {T, V},
    in ascending subset order of T."""
    _require_connected(g)
    if g.n < 2:
        raise ValueError("weight-two basis needs at least two vertices")
    full = g.vertices
    ts = sorted(proper_tubes(g, cap), key=prec_key)
    return [NestedSet(g, tuple(sorted((t, full), key=lambda u: (len(u), u)))) for t in ts]


def gravity_relations(g: Graph, cap: int = DEFAULT_CAP) -> RelationSet:
    """One vector e_T - sum of e_{v} over v in T for each tube of size at
    least two, plus the all-singleton sum."""
    basis = free_weight2_basis(g, cap)
    tubes_ = [ns.tubes[0] for ns in basis]
    index = {t: i for i, t in enumerate(tubes_)}
    vectors = []
    for t in tubes_:
        if len(t) < 2:
            continue
        v = [Fraction(0)] * len(basis)
        v[index[t]] = Fraction(1)
        for u in t:
            v[index[(u,)]] -= 1
        vectors.append(tuple(v))
    total = [Fraction(0)] * len(basis)
    for u in g.vertices:
        total[index[(u,)]] += 1
    vectors.append(tuple(total))
    return RelationSet(g, tuple(basis), tuple(vectors))


def hypercom_relations(g: Graph, cap: int = DEFAULT_CAP) -> RelationSet:
    """One vector per edge (v, v'): the difference of the sums of e_T over
    proper tubes containing v and containing v'."""
    basis = free_weight2_basis(g, cap)
    tubes_ = [ns.tubes[0] for ns in basis]
    vectors = []
    for a, b in g.edges:
        v = [Fraction(0)] * len(basis)
        for i, t in enumerate(tubes_):
            if a in t and b not in t:
                v[i] += 1
            elif b in t and a not in t:
                v[i] -= 1
        vectors.append(tuple(v))
    return RelationSet(g, tuple(basis), tuple(vectors))


def relation_pairing(r1: RelationSet, r2: RelationSet) -> list[list[Fraction]]:
    """Gram matrix of two relation sets under the standard pairing that makes
    the weight-two monomials orthonormal."""
    if r1.host != r2.host or r1.basis != r2.basis:
        raise ValueError("relation sets live on different bases")
    return [
        [sum(a * b for a, b in zip(x, y)) for y in r2.vectors]
        for x in r1.vectors
    ]


# ---------------------------------------------------------------------------
# Axiom checks.
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AxiomReport:
    host: Graph
    violations: tuple  # (axiom name, detail string)

    @property
    def passed(self) -> bool:
        return not self.violations

    def failed_axioms(self) -> set[str]:
        return {name for name, _ in self.violations}


def _require_connected(g: Graph) -> None:
    if g.n == 0 or not is_connected(g):
        raise NotConnectedError("a nonempty connected graph is required")


def check_axioms(model: GrComX, g: Graph, cap: int = DEFAULT_CAP) -> AxiomReport:
    """Verify the unit, parallel, consecutive, and equivariance identities of
    the structure maps on every basis element of the model over g."""
    _require_connected(g)
    violations = []
    full = g.vertices
    ts = proper_tubes(g, cap)
    tube_set = set(ts) | {full}

    def basis_elts(h: Graph):
        return [{a: Fraction(1)} for a in model.basis(h)]

    # unit: composing at the empty set and at the full set is the identity
    for x in basis_elts(g):
        if model.compose(g, (), x, []) != x:
            violations.append(("unit", f"empty-set composition moved {x}"))
        if model.compose(g, full, model.unit(), [x]) != x:
            violations.append(("unit", f"full-set composition moved {x}"))

    # parallel: disjoint non-adjacent tubes compose in either order
    for t1, t2 in itertools.combinations(ts, 2):
        if set(t1) & set(t2):
            continue
        union = tuple(sorted(set(t1) | set(t2)))
        if union in tube_set:
            continue
        g_star_t1 = reconnected_complement(g, t1)
        g_star_t2 = reconnected_complement(g, t2)
        g_star_both = reconnected_complement(g, union)
        for x in basis_elts(g_star_both):
            for y in basis_elts(induced(g, t1)):
                for z in basis_elts(induced(g, t2)):
                    lhs = model.circ(g, t2, model.circ(g_star_t2, t1, x, y), z)
                    rhs = model.circ(g, t1, model.circ(g_star_t1, t2, x, z), y)
                    dy = model.degree(next(iter(y)))
                    dz = model.degree(next(iter(z)))
                    if dy * dz % 2:
                        rhs = _scaled(rhs, Fraction(-1))
                    if lhs != rhs:
                        violations.append(
                            ("parallel", f"tubes {t1},{t2} on {x},{y},{z}")
                        )

    # consecutive: nested tubes compose through the middle layer
    for t1 in ts:
        for t2 in sorted(tube_set, key=lambda t: (len(t), t)):
            if not set(t1) < set(t2):
                continue
            g_t2 = induced(g, t2)
            mid = reconnected_complement(g_t2, t1)
            g_star_t1 = reconnected_complement(g, t1)
            g_star_t2 = reconnected_complement(g, t2)
            between = tuple(sorted(set(t2) - set(t1)))
            for x in basis_elts(g_star_t2):
                for y in basis_elts(mid):
                    for z in basis_elts(induced(g, t1)):
                        lhs = model.circ(g, t2, x, model.circ(g_t2, t1, y, z))
                        rhs = model.circ(
                            g, t1, model.circ(g_star_t1, between, x, y), z
                        )
                        if lhs != rhs:
                            violations.append(
                                ("consecutive", f"tubes {t1}<{t2} on {x},{y},{z}")
                            )

    # equivariance: relabeling commutes with every tube composition
    for alpha in automorphisms(g, cap=max(cap, g.n)):
        for t in ts:
            g_star = reconnected_complement(g, t)
            g_t = induced(g, t)
            at = tuple(sorted(alpha[u] for u in t))
            restr_out = {u: alpha[u] for u in g_star.vertices}
            restr_in = {u: alpha[u] for u in t}
            for x in basis_elts(g_star):
                for y in basis_elts(g_t):
                    lhs = model.relabel(g, alpha, model.circ(g, t, x, y))
                    rhs = model.circ(
                        g,
                        at,
                        model.relabel(g_star, restr_out, x),
                        model.relabel(g_t, restr_in, y),
                    )
                    if lhs != rhs:
                        violations.append(
                            ("equivariance", f"alpha={alpha} tube {t} on {x},{y}")
                        )
    return AxiomReport(g, tuple(violations))
