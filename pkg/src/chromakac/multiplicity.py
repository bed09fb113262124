"""Root multiplicities from the specialised Peterson recurrence, and path sums.

For a connected vertex set ``S`` with at least one edge,

    mult(S) = sum over unordered splits S = A + B (A, B connected) of
              e(A, B) / e(S) * mult(A) * mult(B),

with mult({v}) = 1.  Partition multiplicities are products over blocks.

:func:`path_sums` is an independent route: a dynamic program over the bond
lattice that sums the rational edge weights of all downward paths to 0^.
It never calls :meth:`MultTable.mult_root`.
"""

from __future__ import annotations

from fractions import Fraction
from math import prod

from .errors import ContractViolation, InvariantFailure, SizeLimitError
from .graph import (
    Graph,
    cross_edge_count,
    edge_count,
    form_beta_beta_minus_2rho,
    is_connected,
    members,
    root_form,
)
from .lattice import BondLattice, ConnectedPartition, splits

LITERAL_PATH_MAX_VERTICES = 4


class MultTable:
    """Memoised multiplicities of the roots beta(S), keyed by vertex bitmask.

    Single-threaded: the memo is filled in place without locking.
    """

    def __init__(self, graph: Graph):
        self.graph = graph
        self.memo = {}

    def mult_root(self, S: int) -> int:
        G = self.graph
        if S == 0 or not is_connected(G, S):
            raise ContractViolation(f"vertex set {members(S)} is empty or disconnected")
        return self._mult(S)

    def _mult(self, S):
        hit = self.memo.get(S)
        if hit is not None:
            return hit
        if not S & (S - 1):
            value = 1
        else:
            G = self.graph
            total = Fraction(0)
            for a, b in splits(G, S):
                total += cross_edge_count(G, a, b) * self._mult(a) * self._mult(b)
            total /= edge_count(G, S)
            if total.denominator != 1 or total < 1:
                raise InvariantFailure(f"multiplicity of {members(S)} came out as {total}")
            value = int(total)
        self.memo[S] = value
        return value

    def mult_partition(self, pi: ConnectedPartition) -> int:
        return prod(self.mult_root(b) for b in pi.blocks)

    def all_roots(self):
        """{S: mult(S)} for every connected S, in (size, vertex list) order."""
        G = self.graph
        out = {}
        subsets = [S for S in range(1, 1 << G.l) if is_connected(G, S)]
        subsets.sort(key=lambda S: (bin(S).count("1"), members(S)))
        for S in subsets:
            out[S] = self._mult(S)
        return out


def mult_root(table: MultTable, S: int) -> int:
    return table.mult_root(S)


def mult_partition(table: MultTable, pi: ConnectedPartition) -> int:
    return table.mult_partition(pi)


def _validate_split(G, pi, a, b):
    block = a | b
    if a & b or not a or not b:
        raise ContractViolation("split halves must be disjoint and non-empty")
    if block not in pi.blocks:
        raise ContractViolation(f"{members(block)} is not a block of {pi}")
    if not (is_connected(G, a) and is_connected(G, b)):
        raise ContractViolation("both halves of a split must be connected")
    return block


def edge_weight(G: Graph, pi: ConnectedPartition, split) -> Fraction:
    """w(pi, pi') = e(A, B) / (d(pi) * e(A + B)) for the cover splitting A + B."""
    a, b = split
    block = _validate_split(G, pi, a, b)
    return Fraction(cross_edge_count(G, a, b), pi.d * edge_count(G, block))


def edge_weight_lie(G: Graph, pi: ConnectedPartition, split) -> Fraction:
    """Same weight written with the invariant form:
    (1/|gamma^dagger|) * 2<beta', beta''> / <beta, beta - 2 rho>."""
    a, b = split
    block = _validate_split(G, pi, a, b)
    return Fraction(2 * root_form(G, a, b), pi.d * form_beta_beta_minus_2rho(G, block))


def _cover_weight(G, pi, cover):
    return Fraction(cross_edge_count(G, cover.a, cover.b), pi.d * edge_count(G, cover.block))


def path_sums(lat: BondLattice) -> list:
    """f(pi) = sum over covers pi -> pi' of w(pi, pi') f(pi'), with f(0^) = 1.

    Returned as a list aligned with ``lat.elements``.
    """
    G = lat.graph
    n = len(lat)
    f = [Fraction(0)] * n
    f[n - 1] = Fraction(1)
    for i in range(n - 2, -1, -1):
        pi = lat.elements[i]
        f[i] = sum(
            (_cover_weight(G, pi, c) * f[c.target] for c in lat.covers[i]),
            Fraction(0),
        )
    return f


def literal_paths(lat: BondLattice, pi: ConnectedPartition):
    """Yield (path, weight) for every downward path from pi to 0^.

    Path counts grow factorially; restricted to tiny graphs.
    """
    if lat.graph.l > LITERAL_PATH_MAX_VERTICES:
        raise SizeLimitError("literal path enumeration vertex count", lat.graph.l, LITERAL_PATH_MAX_VERTICES)
    G = lat.graph
    start = lat.position(pi)
    last = len(lat) - 1

    def walk(i, path, weight):
        if i == last:
            yield [lat.elements[j] for j in path], weight
            return
        here = lat.elements[i]
        for c in lat.covers[i]:
            yield from walk(c.target, path + [c.target], weight * _cover_weight(G, here, c))

    yield from walk(start, [start], Fraction(1))


def path_sum(lat: BondLattice, pi: ConnectedPartition, *, literal=False) -> Fraction:
    """Total weight of all paths pi -> ... -> 0^ in the bond lattice."""
    if literal:
        return sum((w for _, w in literal_paths(lat, pi)), Fraction(0))
    return path_sums(lat)[lat.position(pi)]
