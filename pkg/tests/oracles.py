"""Brute-force reference computations used only by the tests.

Nothing here imports the code paths under test beyond the Graph container;
vertex sets are plain Python sets and graphs are adjacency dicts.
"""

from fractions import Fraction
from itertools import product


def adjacency(G):
    adj = {v: set() for v in range(G.l)}
    for u, v in G.edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def connected(adj, S):
    S = set(S)
    if not S:
        return False
    start = next(iter(S))
    seen, stack = {start}, [start]
    while stack:
        x = stack.pop()
        for y in adj[x] & S:
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen == S


def set_partitions(items):
    items = list(items)
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def bond_lattice_brute(G):
    """All connected partitions as frozensets of frozensets."""
    adj = adjacency(G)
    out = set()
    for part in set_partitions(range(G.l)):
        if all(connected(adj, b) for b in part):
            out.add(frozenset(frozenset(b) for b in part))
    return out


def bell(n):
    """Bell numbers by the Bell triangle."""
    row = [1]
    for _ in range(n - 1):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[-1]


def refines(a, b):
    return all(any(x <= y for y in b) for x in a)


def mobius_brute(elements):
    """mu(0^, x) over a list of frozenset-partitions, by refinement checks only."""
    bottom = min(elements, key=lambda p: -len(p))
    order = sorted(elements, key=lambda p: -len(p))
    mu = {}
    for x in order:
        if x == bottom:
            mu[x] = 1
        else:
            mu[x] = -sum(mu[y] for y in mu if y != x and refines(y, x))
    return mu


def coloring_count_brute(G, q):
    return sum(
        1 for c in product(range(q), repeat=G.l)
        if all(c[u] != c[v] for u, v in G.edges)
    )


def has_cycle(n, arcs):
    out = {v: [] for v in range(n)}
    for a, b in arcs:
        out[a].append(b)
    state = [0] * n

    def visit(v):
        state[v] = 1
        for w in out[v]:
            if state[w] == 1 or (state[w] == 0 and visit(w)):
                return True
        state[v] = 2
        return False

    return any(state[v] == 0 and visit(v) for v in range(n))


def acyclic_orientations_brute(G):
    edges = sorted(G.edges)
    total = 0
    for flips in product((False, True), repeat=len(edges)):
        arcs = [(v, u) if f else (u, v) for (u, v), f in zip(edges, flips)]
        if not has_cycle(G.l, arcs):
            total += 1
    return total


def interpolate_values(values):
    """Coefficients (ascending) of the polynomial through (k, values[k]) via
    Newton forward differences; independent of the package's Lagrange code."""
    n = len(values)
    diffs = [Fraction(v) for v in values]
    newton = []
    for _ in range(n):
        newton.append(diffs[0])
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    # sum_k newton[k] * C(x, k)
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]
    for k in range(n):
        for i, c in enumerate(basis):
            coeffs[i] += newton[k] * c
        nxt = [Fraction(0)] * (len(basis) + 1)
        for i, c in enumerate(basis):
            nxt[i + 1] += c / (k + 1)
            nxt[i] -= c * k / (k + 1)
        basis = nxt
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def chromatic_brute(G):
    """Coefficient list of P(G, q) from exhaustive colouring counts."""
    return interpolate_values([coloring_count_brute(G, q) for q in range(G.l + 1)])
