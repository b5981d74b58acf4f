"""Five products of signed graphs sharing one vertex-pair flattening convention.

A product of factors on n1 and n2 vertices lives on n1*n2 vertices; the pair
(i, j) maps to the flat id i*n2 + j. The five constructions differ in which
pairs are adjacent and in how factor signs combine.
"""

from .core import SignedGraph


def pair_to_flat(i: int, j: int, n2: int) -> int:
    return i * n2 + j


def flat_to_pair(flat: int, n2: int) -> tuple[int, int]:
    return divmod(flat, n2)


def pair_labels(n1: int, n2: int) -> tuple[str, ...]:
    """Labels "i,j" for product vertices in flat order."""
    return tuple(f"{i},{j}" for i in range(n1) for j in range(n2))


def cartesian(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """(i,j) ~ (k,l) when the pairs agree in one coordinate and are adjacent
    in the other; the sign comes from the factor providing the edge."""
    n2 = g2.n
    edges = []
    for j in range(n2):
        for u, v, s in g1.edges:
            edges.append((u * n2 + j, v * n2 + j, s))
    for i in range(g1.n):
        for u, v, s in g2.edges:
            edges.append((i * n2 + u, i * n2 + v, s))
    return SignedGraph(g1.n * n2, tuple(edges))


def hg_lex(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Lexicographic product, first signature convention.

    (i,j) ~ (k,l) when i ~ k, or i = k and j ~ l. Cross edges (i != k) carry
    the first factor's sign; fiber edges carry the second factor's sign.
    """
    n2 = g2.n
    edges = []
    for i, k, s in g1.edges:
        for j in range(n2):
            for l in range(n2):
                edges.append((i * n2 + j, k * n2 + l, s))
    for i in range(g1.n):
        for u, v, s in g2.edges:
            edges.append((i * n2 + u, i * n2 + v, s))
    return SignedGraph(g1.n * n2, tuple(edges))


def bcd_lex(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Lexicographic product, second signature convention.

    Same underlying graph as hg_lex. A cross edge multiplies in the second
    factor's sign when the second coordinates are adjacent; fiber edges are
    unchanged. Equal second coordinates count as non-adjacent (no loops).
    """
    n2 = g2.n
    edges = []
    for i, k, s in g1.edges:
        for j in range(n2):
            for l in range(n2):
                sign = s * g2.sign(j, l) if g2.has_edge(j, l) else s
                edges.append((i * n2 + j, k * n2 + l, sign))
    for i in range(g1.n):
        for u, v, s in g2.edges:
            edges.append((i * n2 + u, i * n2 + v, s))
    return SignedGraph(g1.n * n2, tuple(edges))


def tensor(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """(i,j) ~ (k,l) when i ~ k and j ~ l; signs multiply."""
    n2 = g2.n
    edges = []
    for i, k, s1 in g1.edges:
        for j, l, s2 in g2.edges:
            edges.append((i * n2 + j, k * n2 + l, s1 * s2))
            edges.append((i * n2 + l, k * n2 + j, s1 * s2))
    return SignedGraph(g1.n * n2, tuple(edges))


def strong(g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Union of the cartesian and tensor edge sets with their respective signs."""
    n2 = g2.n
    edges = list(cartesian(g1, g2).edges)
    for i, k, s1 in g1.edges:
        for j, l, s2 in g2.edges:
            edges.append((i * n2 + j, k * n2 + l, s1 * s2))
            edges.append((i * n2 + l, k * n2 + j, s1 * s2))
    return SignedGraph(g1.n * n2, tuple(edges))


PRODUCT_KINDS = {
    "cartesian": cartesian,
    "hg_lex": hg_lex,
    "bcd_lex": bcd_lex,
    "tensor": tensor,
    "strong": strong,
}


def product(kind: str, g1: SignedGraph, g2: SignedGraph) -> SignedGraph:
    """Dispatch by product kind name."""
    try:
        fn = PRODUCT_KINDS[kind]
    except KeyError:
        raise ValueError(f"unknown product kind {kind!r}") from None
    return fn(g1, g2)
