"""Shared test helpers: random graphs, relabelings, reference oracles."""

import random
from itertools import permutations

from deckcensus.graphs import Graph

# Published counts of n-vertex graphs up to isomorphism.  Used only as an
# external sanity cross-check; the in-repo dual enumerators are the oracle.
KNOWN_GRAPH_COUNTS = (0, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)


def random_graph(rng: random.Random, n: int) -> Graph:
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, [p for p in pairs if rng.random() < 0.5])


def permuted(g: Graph, perm) -> Graph:
    """Relabel: vertex v of ``g`` becomes perm[v]."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


def graph6_bits(g: Graph, order) -> tuple[int, ...]:
    """Upper-triangle bit sequence of ``g`` relabeled by ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    adj = [[0] * g.n for _ in range(g.n)]
    for u, v in g.edges():
        adj[pos[u]][pos[v]] = adj[pos[v]][pos[u]] = 1
    return tuple(adj[i][j] for j in range(1, g.n) for i in range(j))


def brute_force_min_bits(g: Graph) -> tuple[int, ...]:
    """Reference canonical form: minimum bit sequence over all n! orders."""
    return min(graph6_bits(g, p) for p in permutations(range(g.n)))


def brute_force_isomorphic(a: Graph, b: Graph) -> bool:
    """Reference isomorphism test over all n! bijections."""
    if a.n != b.n:
        return False
    edges_b = set(b.edges())
    for p in permutations(range(a.n)):
        mapped = {tuple(sorted((p[u], p[v]))) for u, v in a.edges()}
        if mapped == edges_b:
            return True
    return False
