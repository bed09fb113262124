"""Simple graphs on vertices ``0..l-1`` and vertex-subset metrics.

Vertex subsets are plain ``int`` bitmasks throughout the package: bit ``v``
set means vertex ``v`` is a member.  A connected subset ``S`` stands for the
positive root ``beta(S)`` (the sum of the simple roots in ``S``) of the
Kac-Moody algebra whose Dynkin diagram is the graph.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import ContractViolation, GraphParseError

FAMILIES = ("path", "cycle", "complete", "star", "random", "edgeless")

# Recorded in reports so fixtures can be reproduced elsewhere.
RANDOM_ALGORITHM = "numpy-pcg64/uniform-per-pair-lex"


# -- bitmask helpers ---------------------------------------------------------

def mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def lowest(mask: int) -> int:
    """Index of the lowest set bit (the minimum vertex of a non-empty set)."""
    return (mask & -mask).bit_length() - 1


def popcount(mask: int) -> int:
    return bin(mask).count("1")


# -- the graph ---------------------------------------------------------------

@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.  ``edges`` holds pairs ``(u, v)`` with ``u < v``."""

    l: int
    edges: frozenset
    adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.l, int) or self.l < 1:
            raise ContractViolation(f"vertex count must be >= 1, got {self.l!r}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ContractViolation(f"self-loop at vertex {u}")
            if not (0 <= u < self.l and 0 <= v < self.l):
                raise ContractViolation(f"edge {e} out of range for l={self.l}")
            norm.add((min(u, v), max(u, v)))
        adj = [0] * self.l
        for u, v in norm:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "edges", frozenset(norm))
        object.__setattr__(self, "adj", tuple(adj))

    @classmethod
    def from_edges(cls, l, edges=()):
        return cls(l, frozenset(tuple(e) for e in edges))

    @property
    def full(self) -> int:
        return (1 << self.l) - 1

    def edge_list(self):
        return sorted(self.edges)

    def num_edges(self):
        return len(self.edges)

    def restrict(self, blocks) -> "Graph":
        """G(Sigma): keep every vertex, drop edges that leave their block."""
        kept = [
            (u, v) for u, v in self.edges
            if any((b >> u) & 1 and (b >> v) & 1 for b in blocks)
        ]
        return Graph.from_edges(self.l, kept)

    def induced(self, S: int) -> "Graph":
        """Standalone induced subgraph on ``S``, relabelled to ``0..|S|-1``."""
        verts = members(S)
        if not verts:
            raise ContractViolation("induced subgraph of the empty set")
        relabel = {v: i for i, v in enumerate(verts)}
        kept = [(relabel[u], relabel[v]) for u, v in self.edges if u in relabel and v in relabel]
        return Graph.from_edges(len(verts), kept)

    def components(self) -> list[int]:
        seen = 0
        comps = []
        for v in range(self.l):
            if not (seen >> v) & 1:
                c = _reach(self, 1 << v, self.full)
                comps.append(c)
                seen |= c
        return comps

    def connected(self) -> bool:
        return is_connected(self, self.full)

    def to_text(self) -> str:
        lines = [str(self.l)] + [f"{u} {v}" for u, v in self.edge_list()]
        return "\n".join(lines) + "\n"


def disjoint_union(g: Graph, h: Graph) -> Graph:
    shifted = [(u + g.l, v + g.l) for u, v in h.edges]
    return Graph.from_edges(g.l + h.l, list(g.edges) + shifted)


# -- parsing and generation --------------------------------------------------

def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: first line ``l``, then ``u v`` per line.

    Blank lines and lines starting with ``#`` are ignored.  Duplicate edges
    collapse; self-loops and out-of-range vertices are errors.
    """
    if text.startswith("\ufeff"):
        text = text[1:]
    l = None
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if l is None:
            if len(parts) != 1:
                raise GraphParseError(lineno, f"expected vertex count, got {line!r}")
            try:
                l = int(parts[0])
            except ValueError:
                raise GraphParseError(lineno, f"vertex count is not an integer: {line!r}") from None
            if l < 1:
                raise GraphParseError(lineno, f"vertex count must be >= 1, got {l}")
            continue
        if len(parts) != 2:
            raise GraphParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(lineno, f"vertex indices must be integers: {line!r}") from None
        for x in (u, v):
            if not 0 <= x < l:
                raise GraphParseError(lineno, f"vertex {x} out of range [0, {l})")
        if u == v:
            raise GraphParseError(lineno, f"self-loop at vertex {u}")
        edges.add((min(u, v), max(u, v)))
    if l is None:
        raise GraphParseError(1, "missing vertex count")
    return Graph(l, frozenset(edges))


def generate_graph(family: str, n: int, seed=None, p=None) -> Graph:
    if family not in FAMILIES:
        raise ContractViolation(f"unknown graph family {family!r}; choose from {', '.join(FAMILIES)}")
    if not isinstance(n, int) or n < 1:
        raise ContractViolation(f"n must be a positive integer, got {n!r}")
    if family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
    elif family == "cycle":
        if n < 3:
            raise ContractViolation("cycle needs n >= 3")
        edges = [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    elif family == "complete":
        edges = list(combinations(range(n), 2))
    elif family == "star":
        edges = [(0, i) for i in range(1, n)]
    elif family == "edgeless":
        edges = []
    else:
        if p is None or seed is None:
            raise ContractViolation("random graphs need both p and seed")
        p = float(p)
        if not 0.0 <= p <= 1.0:
            raise ContractViolation(f"p must lie in [0, 1], got {p}")
        rng = np.random.Generator(np.random.PCG64(int(seed)))
        pairs = list(combinations(range(n), 2))
        draws = rng.random(len(pairs))
        edges = [e for e, x in zip(pairs, draws) if x < p]
    return Graph.from_edges(n, edges)


# -- subset metrics ----------------------------------------------------------

def _check_subset(G: Graph, S: int):
    if S < 0 or S >> G.l:
        raise ContractViolation(f"vertex set {members(S) if S >= 0 else S} not within [0, {G.l})")


def edge_count(G: Graph, S: int) -> int:
    """e(S): number of edges with both ends in S."""
    _check_subset(G, S)
    total = 0
    for v in members(S):
        total += popcount(G.adj[v] & S)
    return total // 2


def cross_edge_count(G: Graph, S: int, T: int) -> int:
    """e(S, T): edges with one end in S and the other in T (S, T disjoint)."""
    _check_subset(G, S)
    _check_subset(G, T)
    if S & T:
        raise ContractViolation("cross_edge_count needs disjoint vertex sets")
    return sum(popcount(G.adj[v] & T) for v in members(S))


def _reach(G: Graph, start: int, within: int) -> int:
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for v in members(frontier):
            nxt |= G.adj[v]
        frontier = nxt & within & ~seen
        seen |= frontier
    return seen


def is_connected(G: Graph, S: int) -> bool:
    _check_subset(G, S)
    if S == 0:
        raise ContractViolation("connectivity of the empty set is undefined")
    return _reach(G, S & -S, S) == S


def simple_root_form(G: Graph, u: int, v: int) -> int:
    """Symmetric form on simple roots: 2 on the diagonal, -1 on edges, else 0."""
    if u == v:
        return 2
    return -1 if (G.adj[u] >> v) & 1 else 0


def root_form(G: Graph, S: int, T: int) -> int:
    """<beta(S), beta(T)> expanded bilinearly over simple roots."""
    return sum(simple_root_form(G, u, v) for u in members(S) for v in members(T))


def form_beta_beta_minus_2rho(G: Graph, S: int) -> int:
    """<beta(S), beta(S) - 2 rho> for a connected S; equals -2 e(S)."""
    if not is_connected(G, S):
        raise ContractViolation(f"vertex set {members(S)} is not connected")
    return -2 * edge_count(G, S)
