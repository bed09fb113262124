"""Chromatic polynomial routes and the q-Kostant / orientation corollaries.

Lattice routes (all go through the bond lattice L_G):

* ``bond-lattice``   sum_pi (-1)^(l-|pi|) mult(pi) q^|pi|
* ``mobius``         sum_pi mu(0^, pi) q^|pi|
* ``path-sum``       as bond-lattice but with mult(pi) replaced by the path-sum DP
* ``matrix``         zeta^T W^l zeta with the cover-weight matrix W

Classical oracles that never touch the lattice:

* ``deletion-contraction``, ``interpolate`` (exhaustive colouring counts),
  ``independent-partitions`` (ordered partitions into independent sets).
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from . import config
from .errors import ContractViolation, InvariantFailure, SizeLimitError
from .graph import Graph, cross_edge_count, edge_count, lowest
from .lattice import BondLattice, ConnectedPartition, enumerate_lattice, mobius
from .multiplicity import MultTable, path_sums
from .polynomial import Polynomial, binomial_expand, falling_factorial, lagrange_interpolate


def _lattice(G, lat, **limits):
    return lat if lat is not None else enumerate_lattice(G, **limits)


def _signed_sum(l, pairs):
    """sum over (|pi|, value) of (-1)^(l-|pi|) value q^|pi|."""
    coeffs = [0] * (l + 1)
    for k, value in pairs:
        coeffs[k] += value if (l - k) % 2 == 0 else -value
    return Polynomial(coeffs)


# -- lattice routes ----------------------------------------------------------

def chromatic_bond_lattice(G: Graph, *, lat=None, table=None, **limits) -> Polynomial:
    lat = _lattice(G, lat, **limits)
    table = table or MultTable(G)
    return _signed_sum(G.l, ((len(pi), table.mult_partition(pi)) for pi in lat))


def chromatic_interval(G: Graph, sigma: ConnectedPartition, *, lat=None, table=None, **limits) -> Polynomial:
    """P(G(sigma), q) summed over the interval [0^, sigma]; degree l."""
    lat = _lattice(G, lat, **limits)
    lat.position(sigma)
    table = table or MultTable(G)
    return _signed_sum(
        G.l, ((len(pi), table.mult_partition(pi)) for pi in lat if pi.refines(sigma))
    )


def chromatic_mobius(G: Graph, *, lat=None, **limits) -> Polynomial:
    lat = _lattice(G, lat, **limits)
    mu = mobius(lat)
    coeffs = [0] * (G.l + 1)
    for pi, m in mu.items():
        coeffs[len(pi)] += m
    return Polynomial(coeffs)


def chromatic_path_sum(G: Graph, *, lat=None, **limits) -> Polynomial:
    lat = _lattice(G, lat, **limits)
    f = path_sums(lat)
    p = _signed_sum(G.l, ((len(pi), f[i]) for i, pi in enumerate(lat.elements)))
    if not p.is_integral():
        raise InvariantFailure(f"path-sum route produced non-integer coefficients: {p!r}")
    return p


class WeightMatrix:
    """The L x L cover-weight matrix, stored sparsely by row.

    Rows and columns follow the lattice's linear extension, so every entry
    lies on or above the diagonal.  Entries are degree <= 1 polynomials:
    ``-w(pi, pi')`` on covers and ``q`` at (0^, 0^).
    """

    def __init__(self, rows):
        self.rows = rows  # list of {col: Polynomial}

    @classmethod
    def from_lattice(cls, lat: BondLattice):
        G = lat.graph
        rows = []
        for i, pi in enumerate(lat.elements):
            row = {}
            for c in lat.covers[i]:
                w = Fraction(cross_edge_count(G, c.a, c.b), pi.d * edge_count(G, c.block))
                row[c.target] = Polynomial([-w])
            rows.append(row)
        rows[-1][len(rows) - 1] = Polynomial.q()
        return cls(rows)

    @property
    def order(self):
        return len(self.rows)

    def entry(self, i, j):
        return self.rows[i].get(j, Polynomial())

    def is_upper_triangular(self):
        return all(j >= i for i, row in enumerate(self.rows) for j in row)

    def diagonal(self):
        return [self.entry(i, i) for i in range(self.order)]

    def __matmul__(self, other):
        if isinstance(other, WeightMatrix):
            out = []
            for row in self.rows:
                acc = {}
                for k, a in row.items():
                    for j, b in other.rows[k].items():
                        acc[j] = acc.get(j, Polynomial()) + a * b
                out.append({j: v for j, v in acc.items() if not v.is_zero()})
            return WeightMatrix(out)
        return [
            sum((a * other[k] for k, a in row.items()), Polynomial()) for row in self.rows
        ]

    def power(self, k):
        """W^k by k - 1 successive multiplications (k >= 1)."""
        if k < 1:
            raise ValueError("power needs k >= 1")
        out = self
        for _ in range(k - 1):
            out = out @ self
        return out

    def sandwich(self, k):
        """zeta^T W^k zeta, evaluated as k matrix-vector products from the right."""
        v = [Polynomial([1])] * self.order
        for _ in range(k):
            v = self @ v
        return sum(v, Polynomial())


def chromatic_matrix_power(G: Graph, *, lat=None, explicit=False, **limits) -> Polynomial:
    """zeta^T W^l zeta.

    ``explicit=True`` forms the matrix power W^l first; the default applies W
    to zeta l times, which is the same product associated from the right.
    """
    lat = _lattice(G, lat, **limits)
    W = WeightMatrix.from_lattice(lat)
    if explicit:
        P = W.power(G.l)
        p = sum((v for row in P.rows for v in row.values()), Polynomial())
    else:
        p = W.sandwich(G.l)
    if not p.is_integral():
        raise InvariantFailure(f"matrix route produced non-integer coefficients: {p!r}")
    return p


# -- classical oracles -------------------------------------------------------

def _canon(n, edges):
    """Drop isolated vertices from the key; they contribute a factor q each."""
    used = sorted({v for e in edges for v in e})
    relabel = {v: i for i, v in enumerate(used)}
    key = tuple(sorted((relabel[u], relabel[v]) for u, v in edges))
    return n - len(used), len(used), key


@lru_cache(maxsize=None)
def _dc(n, edges):
    # n vertices 0..n-1, edges sorted tuple of (u, v) with u < v, every vertex used
    if not edges:
        return Polynomial.monomial(n)
    u, v = edges[0]
    deleted = edges[1:]
    # contract v into u, then drop v by shifting labels above it down
    merged = set()
    for a, b in deleted:
        a = u if a == v else a
        b = u if b == v else b
        a = a - 1 if a > v else a
        b = b - 1 if b > v else b
        if a != b:
            merged.add((min(a, b), max(a, b)))
    return _dc_any(n, deleted) - _dc_any(n - 1, tuple(sorted(merged)))


def _dc_any(n, edges):
    isolated, used, key = _canon(n, edges)
    return _dc(used, key).shift(isolated)


def chromatic_deletion_contraction(G: Graph) -> Polynomial:
    """P(G) = P(G - e) - P(G / e) on the smallest edge, memoised on edge sets."""
    return _dc_any(G.l, tuple(G.edge_list()))


def coloring_count(G: Graph, q: int, *, max_colors=None, max_vertices=None) -> int:
    """Number of proper q-colourings, by exhaustive assignment.

    Vertices are coloured in index order; a branch is cut as soon as it
    conflicts, and the final vertex is counted rather than enumerated.
    """
    qcap = config.MAX_COLORS if max_colors is None else max_colors
    vcap = config.MAX_COLOR_VERTICES if max_vertices is None else max_vertices
    if q < 0:
        raise ContractViolation("number of colours must be non-negative")
    if q > qcap:
        raise SizeLimitError("colour count", q, qcap)
    if G.l > vcap:
        raise SizeLimitError("colouring vertex count", G.l, vcap)
    l = G.l
    earlier = [[u for u in range(v) if (G.adj[v] >> u) & 1] for v in range(l)]
    colour = [0] * l

    def extend(v):
        banned = {colour[u] for u in earlier[v]}
        if v == l - 1:
            return q - len(banned)
        total = 0
        for c in range(q):
            if c not in banned:
                colour[v] = c
                total += extend(v + 1)
        return total

    return extend(0)


def chromatic_interpolated(G: Graph, **guards) -> Polynomial:
    pts = [(q, coloring_count(G, q, **guards)) for q in range(G.l + 1)]
    p = lagrange_interpolate(pts)
    if not p.is_integral():
        raise InvariantFailure(f"interpolated polynomial is not integral: {p!r}")
    return p


def independent_partition_counts(G: Graph, *, max_vertices=None) -> dict:
    """k -> number of unordered partitions of the vertex set into k independent sets."""
    vcap = config.MAX_COLOR_VERTICES if max_vertices is None else max_vertices
    if G.l > vcap:
        raise SizeLimitError("independent-partition vertex count", G.l, vcap)
    counts = {}

    def independent_subsets(v, allowed):
        # independent sets containing v inside allowed, v = min
        pool = allowed & ~G.adj[v] & ~(1 << v)

        def grow(current, pool):
            yield current
            while pool:
                u = pool & -pool
                pool ^= u
                yield from grow(current | u, pool & ~G.adj[lowest(u)])

        yield from grow(1 << v, pool)

    def assign(remaining, k):
        if not remaining:
            counts[k] = counts.get(k, 0) + 1
            return
        v = lowest(remaining)
        for block in independent_subsets(v, remaining):
            assign(remaining & ~block, k + 1)

    assign(G.full, 0)
    return dict(sorted(counts.items()))


def ordered_independent_partition_counts(G: Graph, **guards) -> dict:
    """c_k: ordered k-tuples of independent sets partitioning the vertices."""
    return {k: n * factorial(k) for k, n in independent_partition_counts(G, **guards).items()}


def chromatic_independent_partitions(G: Graph, **guards) -> Polynomial:
    """sum_k c_k * C(q, k)."""
    p = binomial_expand(ordered_independent_partition_counts(G, **guards))
    if not p.is_integral():
        raise InvariantFailure(f"independent-partition expansion is not integral: {p!r}")
    return p


# -- corollaries -------------------------------------------------------------

def signed_flip(p: Polynomial, l: int) -> Polynomial:
    """(-1)^l p(-q)."""
    flipped = p.substitute_neg()
    return flipped if l % 2 == 0 else -flipped


def q_kostant_at_beta(G: Graph, *, lat=None, table=None, **limits) -> Polynomial:
    """K(beta(Pi); q) = sum over L_G of mult(pi) q^|pi|."""
    lat = _lattice(G, lat, **limits)
    table = table or MultTable(G)
    coeffs = [0] * (G.l + 1)
    for pi in lat:
        coeffs[len(pi)] += table.mult_partition(pi)
    return Polynomial(coeffs)


def acyclic_orientation_count(G: Graph, *, max_edges=None) -> int:
    """Count orientations of the edges with no directed cycle.

    Edges are oriented one at a time while keeping the reachability relation
    of the partial orientation; a choice that closes a cycle is dropped
    together with all of its completions, which are necessarily cyclic too.
    """
    cap = config.MAX_ORIENTATION_EDGES if max_edges is None else max_edges
    edges = G.edge_list()
    if len(edges) > cap:
        raise SizeLimitError("orientation edge count", len(edges), cap)
    l = G.l

    def orient(k, reach):
        # reach[x]: bitmask of vertices reachable from x (including x)
        if k == len(edges):
            return 1
        u, v = edges[k]
        total = 0
        for a, b in ((u, v), (v, u)):
            if (reach[b] >> a) & 1:
                continue
            # a -> b: everything reaching a now reaches everything b reaches
            new = list(reach)
            rb = reach[b]
            for x in range(l):
                if (reach[x] >> a) & 1:
                    new[x] |= rb
            total += orient(k + 1, new)
        return total

    return orient(0, [1 << x for x in range(l)])


def coxeter_class_count(G: Graph, *, table=None, lat=None, **limits) -> int:
    """mult beta(Pi) for connected G, checked against the q^1 coefficient of K(beta; q)."""
    if not G.connected():
        raise ContractViolation("coxeter_class_count needs a connected graph")
    table = table or MultTable(G)
    m = table.mult_root(G.full)
    k1 = q_kostant_at_beta(G, lat=lat, table=table, **limits).coeff(1)
    if m != k1:
        raise InvariantFailure(f"mult beta(Pi) = {m} but q-Kostant q^1 coefficient = {k1}")
    return m


# -- dispatch ----------------------------------------------------------------

LATTICE_METHODS = ("bond-lattice", "mobius", "path-sum", "matrix")
ORACLE_METHODS = ("deletion-contraction", "interpolate", "independent-partitions")
CHROMATIC_METHODS = LATTICE_METHODS + ORACLE_METHODS
METHODS = CHROMATIC_METHODS + ("kostant",)


def compute(G: Graph, method: str, *, lat=None, table=None, **limits) -> Polynomial:
    if method not in METHODS:
        raise ContractViolation(f"unknown method {method!r}; choose from {', '.join(METHODS)}")
    if method in ORACLE_METHODS:
        return {
            "deletion-contraction": chromatic_deletion_contraction,
            "interpolate": chromatic_interpolated,
            "independent-partitions": chromatic_independent_partitions,
        }[method](G)
    lat = _lattice(G, lat, **limits)
    if method == "bond-lattice":
        return chromatic_bond_lattice(G, lat=lat, table=table)
    if method == "mobius":
        return chromatic_mobius(G, lat=lat)
    if method == "path-sum":
        return chromatic_path_sum(G, lat=lat)
    if method == "matrix":
        return chromatic_matrix_power(G, lat=lat)
    return q_kostant_at_beta(G, lat=lat, table=table)
