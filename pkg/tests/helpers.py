"""Shared test oracles, independent of the library's own algorithms."""

import random
from itertools import product as iproduct

from sgraph import SignedGraph, apply_switching, build_graph


def all_signatures(g: SignedGraph):
    """Every re-signing of g's underlying graph."""
    pairs = [(u, v) for u, v, _ in g.edges]
    for signs in iproduct((-1, 1), repeat=len(pairs)):
        yield build_graph(g.n, [(u, v, s) for (u, v), s in zip(pairs, signs)])


def brute_balanced(g: SignedGraph) -> bool:
    """Balance by trying all 2^n scalar switchings."""
    return any(
        all(s == 1 for _, _, s in apply_switching(g, zeta).edges)
        for zeta in iproduct((-1, 1), repeat=g.n)
    )


def brute_switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Switching equivalence by trying all 2^n scalar switchings."""
    if g1.n != g2.n:
        return False
    if [(u, v) for u, v, _ in g1.edges] != [(u, v) for u, v, _ in g2.edges]:
        return False
    return any(
        apply_switching(g1, zeta).edges == g2.edges
        for zeta in iproduct((-1, 1), repeat=g1.n)
    )


def simple_cycles(g: SignedGraph) -> list[tuple[int, ...]]:
    """All simple cycles, one canonical tuple each.

    Canonical form: starts at the cycle's smallest vertex and runs toward the
    smaller of its two neighbors on the cycle.
    """
    cycles = set()

    def extend(path, visited):
        u = path[-1]
        for v in g.neighbors(u):
            if v == path[0] and len(path) >= 3:
                if path[1] < path[-1]:
                    cycles.add(tuple(path))
            elif v not in visited and v > path[0]:
                extend(path + [v], visited | {v})

    for root in range(g.n):
        extend([root], {root})
    return sorted(cycles)


def random_signed_graph(rng: random.Random, max_n: int = 5) -> SignedGraph:
    """Each vertex pair independently present with probability 1/2."""
    n = rng.randint(1, max_n)
    edges = [
        (u, v, rng.choice((-1, 1)))
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < 0.5
    ]
    return build_graph(n, edges)


# Seed for the 200-graph oracle-equivalence corpus. Chosen once and frozen:
# every graph it yields stays within the brute-force enumeration guard.
CORPUS_SEED = 1729


def oracle_corpus(count: int = 200, max_n: int = 5) -> list[SignedGraph]:
    rng = random.Random(CORPUS_SEED)
    return [random_signed_graph(rng, max_n) for _ in range(count)]


def max_pairwise_negative_set(k: int) -> int:
    """Largest set of nonzero vectors in {-1,0,1}^k with pairwise negative
    inner products.

    Branch-and-bound maximum clique on the pairwise-negativity graph; a
    second, search-free route to lower bounds on the dimension of all-negative
    complete graphs (n vectors fit exactly when the set size reaches n).
    """
    vecs = [v for v in iproduct((-1, 0, 1), repeat=k) if any(v)]
    n = len(vecs)
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if sum(a * b for a, b in zip(vecs[i], vecs[j])) < 0:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    best = 0

    def expand(size: int, cand: int):
        nonlocal best
        if size > best:
            best = size
        while cand:
            if size + cand.bit_count() <= best:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            expand(size + 1, cand & adj[v])

    expand(0, (1 << n) - 1)
    return best
