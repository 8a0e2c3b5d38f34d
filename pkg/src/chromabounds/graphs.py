"""Simple graphs, proper-coloring counts, and chromatic polynomials.

Two independent routes to the chromatic polynomial live here: the
deletion-contraction recurrence (`chromatic_poly`) and exact Lagrange
interpolation through brute-force coloring counts
(`chromatic_poly_interpolated`). They must agree coefficient-exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, InvariantError, ResourceLimitError
from .exactmath import IntPolynomial

DEFAULT_COLORING_CAP = 10**8

Edge = tuple[int, int]


@dataclass(frozen=True)
class SimpleGraph:
    """Vertices 0..n-1 plus a set of unordered edges; no loops, no multi-edges."""

    n: int
    edges: frozenset[Edge] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise InputError(f"vertex count must be nonnegative, got {self.n}")
        normalized = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise InputError(f"loop at vertex {u} is not allowed in a simple graph")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise InputError(f"edge {e} has an endpoint outside 0..{self.n - 1}")
            normalized.add((u, v) if u < v else (v, u))
        object.__setattr__(self, "edges", frozenset(normalized))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


@dataclass(frozen=True)
class GraphRankInfo:
    components: int
    rank: int


def path(k: int) -> SimpleGraph:
    """Path on k vertices (k-1 edges)."""
    return SimpleGraph(k, frozenset((i, i + 1) for i in range(k - 1)))


def cycle(k: int) -> SimpleGraph:
    """Cycle on k >= 3 vertices."""
    if k < 3:
        raise InputError("a cycle needs at least 3 vertices")
    return SimpleGraph(k, frozenset((i, (i + 1) % k) for i in range(k)))


def complete(k: int) -> SimpleGraph:
    return SimpleGraph(k, frozenset((i, j) for i in range(k) for j in range(i + 1, k)))


def complete_bipartite(a: int, b: int) -> SimpleGraph:
    return SimpleGraph(a + b, frozenset((i, a + j) for i in range(a) for j in range(b)))


def disjoint_union(g: SimpleGraph, h: SimpleGraph) -> SimpleGraph:
    shifted = {(u + g.n, v + g.n) for u, v in h.edges}
    return SimpleGraph(g.n + h.n, frozenset(g.edges) | shifted)


def rank_info(g: SimpleGraph) -> GraphRankInfo:
    """Connected-component count c and rank r = n - c."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    components = g.n
    for u, v in g.edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            components -= 1
    return GraphRankInfo(components=components, rank=g.n - components)


def is_forest(g: SimpleGraph) -> bool:
    return g.m == rank_info(g).rank


def delete_edge(g: SimpleGraph, e: Edge) -> SimpleGraph:
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise InputError(f"edge {e} not in graph")
    return SimpleGraph(g.n, g.edges - {(u, v)})


def contract_edge(g: SimpleGraph, e: Edge) -> SimpleGraph:
    """Contract e = (u, v): merge v into u, drop loops, collapse parallels.

    Vertices above v are relabeled down by one so the result stays on
    0..n-2. Collapsing parallel edges keeps the graph simple without
    changing its chromatic polynomial.
    """
    u, v = min(e), max(e)
    if (u, v) not in g.edges:
        raise InputError(f"edge {e} not in graph")

    def relabel(w: int) -> int:
        if w == v:
            return u
        return w - 1 if w > v else w

    new_edges = set()
    for a, b in g.edges:
        if (a, b) == (u, v):
            continue
        ra, rb = relabel(a), relabel(b)
        if ra != rb:
            new_edges.add((min(ra, rb), max(ra, rb)))
    return SimpleGraph(g.n - 1, frozenset(new_edges))


def _graph_key(g: SimpleGraph) -> tuple[int, tuple[Edge, ...]]:
    return (g.n, tuple(g.sorted_edges()))


def _chromatic_poly(g: SimpleGraph, memo: dict) -> IntPolynomial:
    if not g.edges:
        return IntPolynomial.term(1, g.n)
    key = _graph_key(g)
    cached = memo.get(key)
    if cached is not None:
        return cached
    e = min(g.edges)
    result = _chromatic_poly(delete_edge(g, e), memo) - _chromatic_poly(contract_edge(g, e), memo)
    memo[key] = result
    return result


def chromatic_poly(g: SimpleGraph, memo: dict | None = None) -> IntPolynomial:
    """Chromatic polynomial via deletion-contraction on the smallest edge.

    An optional memo dict (keyed by the exact vertex count and sorted edge
    set) may be shared across calls; it never changes results.
    """
    return _chromatic_poly(g, {} if memo is None else memo)


def count_colorings(g: SimpleGraph, t: int, cap: int = DEFAULT_COLORING_CAP) -> int:
    """Exhaustive count of proper colorings with t colors (the oracle).

    Guarded by t^n <= cap since the search space is the full assignment
    cube in the worst case.
    """
    if t < 0:
        raise InputError("color count must be nonnegative")
    if t**g.n > cap:
        raise ResourceLimitError(f"{t}^{g.n} assignments exceed the cap of {cap}")
    earlier: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.edges:
        earlier[max(u, v)].append(min(u, v))
    colors = [0] * g.n

    def assign(v: int) -> int:
        if v == g.n:
            return 1
        total = 0
        for c in range(t):
            if all(colors[u] != c for u in earlier[v]):
                colors[v] = c
                total += assign(v + 1)
        return total

    return assign(0)


def chromatic_poly_interpolated(g: SimpleGraph, cap: int = DEFAULT_COLORING_CAP) -> IntPolynomial:
    """Exact Lagrange interpolation through (t, count_colorings(g, t)), t = 0..n."""
    values = [count_colorings(g, t, cap=cap) for t in range(g.n + 1)]
    coeffs = [Fraction(0)] * (g.n + 1)
    for i, y in enumerate(values):
        if y == 0:
            continue
        basis = [Fraction(1)]
        denom = 1
        for j in range(g.n + 1):
            if j == i:
                continue
            grown = [Fraction(0)] * (len(basis) + 1)
            for p, c in enumerate(basis):
                grown[p + 1] += c
                grown[p] -= c * j
            basis = grown
            denom *= i - j
        scale = Fraction(y, denom)
        for p, c in enumerate(basis):
            coeffs[p] += scale * c
    if any(c.denominator != 1 for c in coeffs):
        raise InvariantError("interpolation produced non-integer coefficients")
    return IntPolynomial(tuple(int(c) for c in coeffs))
