"""The bond lattice of a graph: partitions of the vertex set into connected blocks.

Elements are kept in one fixed linear extension, coarsest first (fewest
blocks first, ties broken lexicographically on the sorted block lists), so
the all-singletons partition ``0^`` is always last and every cover relation
points forward in the ordering.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import config
from .errors import ContractViolation, LatticeLookupError, SizeLimitError
from .graph import Graph, is_connected, lowest, mask_of, members


@dataclass(frozen=True)
class ConnectedPartition:
    """Blocks as vertex bitmasks, ordered by their minimum vertex."""

    blocks: tuple

    @classmethod
    def from_lists(cls, lists):
        return cls.canonical(mask_of(b) for b in lists)

    @classmethod
    def canonical(cls, blocks):
        return cls(tuple(sorted(blocks, key=lowest)))

    def __len__(self):
        return len(self.blocks)

    @property
    def d(self):
        """Number of non-singleton blocks."""
        return sum(1 for b in self.blocks if b & (b - 1))

    def as_lists(self):
        return [members(b) for b in self.blocks]

    def sort_key(self):
        return (len(self.blocks), self.as_lists())

    def refines(self, other: "ConnectedPartition") -> bool:
        """True when every block of self lies inside a block of ``other``."""
        return all(any(b & o == b for o in other.blocks) for b in self.blocks)

    def split(self, block, a, b) -> "ConnectedPartition":
        rest = [x for x in self.blocks if x != block]
        return ConnectedPartition.canonical(rest + [a, b])

    def __str__(self):
        return "".join("{" + ",".join(map(str, blk)) + "}" for blk in self.as_lists())


@dataclass(frozen=True)
class Cover:
    """pi -> target: block ``block`` of pi splits into halves ``a`` and ``b``.

    ``a`` contains the minimum vertex of ``block``.
    """

    target: int
    block: int
    a: int
    b: int


class BondLattice:
    """Immutable bond lattice.  ``covers[i]`` lists the elements element ``i`` covers."""

    def __init__(self, graph, elements, covers):
        self.graph = graph
        self.elements = tuple(elements)
        self.covers = tuple(tuple(c) for c in covers)
        self.index = {pi: i for i, pi in enumerate(self.elements)}
        self.bottom = self.elements[-1]
        self.top = self.elements[0]

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, pi):
        return pi in self.index

    def position(self, pi) -> int:
        try:
            return self.index[pi]
        except KeyError:
            raise LatticeLookupError(f"{pi} is not an element of this bond lattice") from None

    def rank(self, pi) -> int:
        return self.graph.l - len(pi)


# -- enumeration -------------------------------------------------------------

def connected_sets_containing(G: Graph, v: int, allowed: int):
    """Yield every connected subset of ``allowed`` that contains ``v``, once each."""

    def grow(current, frontier, banned):
        yield current
        while frontier:
            u = frontier & -frontier
            frontier ^= u
            ext = (frontier | G.adj[lowest(u)]) & allowed & ~current & ~banned & ~u
            yield from grow(current | u, ext, banned)
            banned |= u

    start = 1 << v
    yield from grow(start, G.adj[v] & allowed, start)


def _partitions(G: Graph, cap: int):
    count = 0

    def assign(remaining, blocks):
        nonlocal count
        if not remaining:
            count += 1
            if count > cap:
                raise SizeLimitError("bond lattice size", count, cap)
            yield ConnectedPartition(tuple(blocks))
            return
        v = lowest(remaining)
        for S in connected_sets_containing(G, v, remaining):
            blocks.append(S)
            yield from assign(remaining & ~S, blocks)
            blocks.pop()

    yield from assign(G.full, [])


def splits(G: Graph, S: int):
    """Unordered splits S = A + B into two connected halves; A holds min(S)."""
    m = lowest(S)
    rest = S & ~(1 << m)
    # every submask of rest, including 0, joined with the minimum vertex
    sub = rest
    while True:
        A = sub | (1 << m)
        B = S & ~A
        if B and is_connected(G, A) and is_connected(G, B):
            yield A, B
        if sub == 0:
            break
        sub = (sub - 1) & rest


def enumerate_lattice(G: Graph, *, max_lattice=None, max_vertices=None) -> BondLattice:
    vcap = config.max_vertices(max_vertices)
    if G.l > vcap:
        raise SizeLimitError("vertex count", G.l, vcap)
    cap = config.max_lattice(max_lattice)
    elements = sorted(_partitions(G, cap), key=ConnectedPartition.sort_key)
    index = {pi: i for i, pi in enumerate(elements)}
    split_cache = {}
    covers = []
    for pi in elements:
        row = []
        for blk in pi.blocks:
            if not blk & (blk - 1):
                continue
            if blk not in split_cache:
                split_cache[blk] = list(splits(G, blk))
            for a, b in split_cache[blk]:
                row.append(Cover(index[pi.split(blk, a, b)], blk, a, b))
        row.sort(key=lambda c: c.target)
        covers.append(row)
    return BondLattice(G, elements, covers)


def covers_of(lat: BondLattice, pi: ConnectedPartition):
    """[(pi', (A, B)), ...] for every pi' covered by pi."""
    i = lat.position(pi)
    return [(lat.elements[c.target], (c.a, c.b)) for c in lat.covers[i]]


def down_sets(lat: BondLattice):
    """Bitset (as int) over lattice positions of every element below each element."""
    down = [0] * len(lat)
    for i in range(len(lat) - 1, -1, -1):
        acc = 1 << i
        for c in lat.covers[i]:
            acc |= down[c.target]
        down[i] = acc
    return down


def interval_below(lat: BondLattice, sigma: ConnectedPartition) -> BondLattice:
    """Sub-lattice [0^, sigma], i.e. every element refining sigma."""
    lat.position(sigma)
    keep = [i for i, pi in enumerate(lat.elements) if pi.refines(sigma)]
    remap = {old: new for new, old in enumerate(keep)}
    elements = [lat.elements[i] for i in keep]
    covers = [
        [Cover(remap[c.target], c.block, c.a, c.b) for c in lat.covers[i]]
        for i in keep
    ]
    return BondLattice(lat.graph.restrict(sigma.blocks), elements, covers)


def mobius(lat: BondLattice) -> dict:
    """mu(0^, pi) for every element, from mu(0^,0^) = 1 and vanishing interval sums."""
    down = down_sets(lat)
    mu = [0] * len(lat)
    for i in range(len(lat) - 1, -1, -1):
        if i == len(lat) - 1:
            mu[i] = 1
            continue
        below = down[i] & ~(1 << i)
        total = 0
        while below:
            j = (below & -below).bit_length() - 1
            total += mu[j]
            below &= below - 1
        mu[i] = -total
    return {pi: mu[i] for i, pi in enumerate(lat.elements)}


def bottom_of(G: Graph) -> ConnectedPartition:
    return ConnectedPartition(tuple(1 << v for v in range(G.l)))


def partition_of(lat: BondLattice, lists) -> ConnectedPartition:
    """Look up an element by its blocks given as vertex lists."""
    pi = ConnectedPartition.from_lists(lists)
    lat.position(pi)
    return pi


def check_partition(G: Graph, pi: ConnectedPartition):
    union = 0
    for b in pi.blocks:
        if union & b:
            raise ContractViolation(f"{pi} has overlapping blocks")
        if not is_connected(G, b):
            raise ContractViolation(f"block {members(b)} of {pi} is not connected")
        union |= b
    if union != G.full:
        raise ContractViolation(f"{pi} does not cover every vertex")
