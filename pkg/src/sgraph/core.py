"""Signed graphs: immutable representation, named generators, scalar switching,
and the balance / antibalance / switching-equivalence decision procedures."""

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

Edge = tuple[int, int, int]

GENERATOR_KINDS = (
    "all_positive_complete",
    "all_negative_complete",
    "antibalanced_complete",
    "unbalanced_cycle",
    "path",
    "null_graph",
    "signed_custom",
)


class GraphError(ValueError):
    """Malformed signed graph."""


class LoopEdgeError(GraphError):
    """Edge joins a vertex to itself."""


class DuplicateEdgeError(GraphError):
    """More than one edge on the same vertex pair."""


class VertexRangeError(GraphError):
    """Edge endpoint outside 0..n-1."""


class SignError(GraphError):
    """Edge sign other than -1 or +1."""


class SwitchingError(ValueError):
    """Switching function does not cover the graph or has values outside {-1,+1}."""


class NotACycleError(ValueError):
    """Vertex sequence is not a simple cycle of the graph."""


@dataclass(frozen=True)
class SignedGraph:
    """Simple undirected graph on vertices 0..n-1 with edges labeled -1 or +1.

    Edges are normalized on construction: endpoints ordered u < v, stored
    sorted lexicographically. Loops, duplicate pairs, out-of-range endpoints
    and bad signs are rejected, each with its own error type. Instances are
    immutable and safe to share.
    """

    n: int
    edges: tuple[Edge, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be >= 0, got {self.n}")
        normalized = []
        for u, v, s in self.edges:
            if u == v:
                raise LoopEdgeError(f"loop edge at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise VertexRangeError(
                    f"edge ({u},{v}) outside vertex range 0..{self.n - 1}"
                )
            if s not in (-1, 1):
                raise SignError(f"edge ({u},{v}) has sign {s!r}, expected -1 or +1")
            normalized.append((u, v, s) if u < v else (v, u, s))
        normalized.sort()
        for a, b in zip(normalized, normalized[1:]):
            if a[:2] == b[:2]:
                raise DuplicateEdgeError(f"duplicate edge ({a[0]},{a[1]})")
        object.__setattr__(self, "edges", tuple(normalized))

    @cached_property
    def _adjacency(self) -> tuple[dict[int, int], ...]:
        adj: list[dict[int, int]] = [{} for _ in range(self.n)]
        for u, v, s in self.edges:
            adj[u][v] = s
            adj[v][u] = s
        return tuple(adj)

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(sorted(self._adjacency[u]))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adjacency[u]

    def sign(self, u: int, v: int) -> int:
        try:
            return self._adjacency[u][v]
        except (KeyError, IndexError):
            raise GraphError(f"no edge ({u},{v})") from None


def build_graph(n: int, edge_list: Iterable[Sequence[int]]) -> SignedGraph:
    """Validate an edge list of (u, v, sign) triples into a SignedGraph."""
    edges = []
    for item in edge_list:
        u, v, s = item
        edges.append((int(u), int(v), int(s)))
    return SignedGraph(n, tuple(edges))


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one of the named graph families.

    `order` is the vertex count; `edges` is used only by kind "signed_custom".
    """

    kind: str
    order: int = 0
    edges: tuple[Edge, ...] | None = None


def generate(spec: GeneratorSpec) -> SignedGraph:
    """Build the graph described by a GeneratorSpec."""
    if spec.kind not in GENERATOR_KINDS:
        raise GraphError(f"unknown generator kind {spec.kind!r}")
    if spec.kind == "signed_custom":
        return build_graph(spec.order, spec.edges or ())
    if spec.order < 1:
        raise GraphError(f"{spec.kind} needs order >= 1, got {spec.order}")
    if spec.kind == "unbalanced_cycle" and spec.order < 3:
        raise GraphError(f"unbalanced_cycle needs order >= 3, got {spec.order}")
    builders = {
        "all_positive_complete": all_positive_complete,
        "all_negative_complete": all_negative_complete,
        "antibalanced_complete": antibalanced_complete,
        "unbalanced_cycle": unbalanced_cycle,
        "path": path_graph,
        "null_graph": null_graph,
    }
    return builders[spec.kind](spec.order)


def all_positive_complete(n: int) -> SignedGraph:
    """Complete graph on n vertices, every edge positive."""
    return SignedGraph(
        n, tuple((u, v, 1) for u in range(n) for v in range(u + 1, n))
    )


def all_negative_complete(n: int) -> SignedGraph:
    """Complete graph on n vertices, every edge negative."""
    return SignedGraph(
        n, tuple((u, v, -1) for u in range(n) for v in range(u + 1, n))
    )


def antibalanced_complete(n: int) -> SignedGraph:
    """Canonical antibalanced complete graph: the all-negative one.

    Every antibalanced complete signed graph switches to this form, so it
    serves as the family representative.
    """
    return all_negative_complete(n)


def unbalanced_cycle(n: int) -> SignedGraph:
    """Cycle 0-1-...-(n-1)-0 with exactly the edge (0,1) negative."""
    if n < 3:
        raise GraphError(f"unbalanced_cycle needs order >= 3, got {n}")
    edges = [(0, 1, -1)]
    edges.extend((i, i + 1, 1) for i in range(1, n - 1))
    edges.append((0, n - 1, 1))
    return SignedGraph(n, tuple(edges))


def path_graph(n: int) -> SignedGraph:
    """All-positive path 0-1-...-(n-1)."""
    return SignedGraph(n, tuple((i, i + 1, 1) for i in range(n - 1)))


def null_graph(n: int) -> SignedGraph:
    """n vertices, no edges."""
    return SignedGraph(n, ())


def negate(g: SignedGraph) -> SignedGraph:
    """Flip every edge sign. Involutive."""
    return SignedGraph(g.n, tuple((u, v, -s) for u, v, s in g.edges))


def is_all_positive(g: SignedGraph) -> bool:
    return all(s == 1 for _, _, s in g.edges)


def is_all_negative(g: SignedGraph) -> bool:
    return all(s == -1 for _, _, s in g.edges)


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs along a simple cycle given as a vertex sequence.

    The sequence must list distinct vertices whose consecutive pairs (wrapping
    around) are all edges of g.
    """
    if len(cycle) < 3:
        raise NotACycleError("a cycle needs at least 3 vertices")
    if len(set(cycle)) != len(cycle):
        raise NotACycleError("repeated vertex in cycle")
    sign = 1
    closed = tuple(cycle) + (cycle[0],)
    for a, b in zip(closed, closed[1:]):
        if not g.has_edge(a, b):
            raise NotACycleError(f"({a},{b}) is not an edge of the graph")
        sign *= g.sign(a, b)
    return sign


def apply_switching(g: SignedGraph, zeta: Sequence[int]) -> SignedGraph:
    """Multiply each edge sign by zeta(u)*zeta(v) for a vertex map into {-1,+1}."""
    if len(zeta) != g.n:
        raise SwitchingError(f"switching covers {len(zeta)} vertices, graph has {g.n}")
    for v, x in enumerate(zeta):
        if x not in (-1, 1):
            raise SwitchingError(f"switching value at vertex {v} is {x!r}")
    return SignedGraph(
        g.n, tuple((u, v, s * zeta[u] * zeta[v]) for u, v, s in g.edges)
    )


def is_balanced(g: SignedGraph) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Decide balance; if balanced, also return a switching to all-positive.

    Spanning-tree propagation per component: the smallest vertex of each
    component gets +1, values follow edge signs outward along a BFS tree, and
    every edge is then verified against the propagated values. Balanced means
    no cycle has negative sign.
    """
    zeta = [0] * g.n
    for root in range(g.n):
        if zeta[root]:
            continue
        zeta[root] = 1
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if zeta[v] == 0:
                    zeta[v] = zeta[u] * g.sign(u, v)
                    queue.append(v)
    for u, v, s in g.edges:
        if zeta[u] * s * zeta[v] != 1:
            return False, None
    return True, tuple(zeta)


def is_antibalanced(g: SignedGraph) -> bool:
    """True when the sign-flipped graph is balanced."""
    return is_balanced(negate(g))[0]


def is_switching_equivalent(g1: SignedGraph, g2: SignedGraph) -> bool:
    """Same underlying graph and related by some scalar switching.

    Uses the product-signature test: the two graphs are equivalent exactly
    when the graph carrying the product of their signs on each edge is
    balanced.
    """
    if g1.n != g2.n:
        return False
    if [(u, v) for u, v, _ in g1.edges] != [(u, v) for u, v, _ in g2.edges]:
        return False
    prod = SignedGraph(
        g1.n, tuple((u, v, s * g2.sign(u, v)) for u, v, s in g1.edges)
    )
    return is_balanced(prod)[0]


def components(g: SignedGraph) -> list[list[int]]:
    """Connected components, each as a BFS order rooted at its smallest vertex."""
    seen = [False] * g.n
    out = []
    for root in range(g.n):
        if seen[root]:
            continue
        seen[root] = True
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors(u):
                if not seen[v]:
                    seen[v] = True
                    order.append(v)
                    queue.append(v)
        out.append(order)
    return out


def induced_subgraph(g: SignedGraph, vertices: Sequence[int]) -> SignedGraph:
    """Subgraph on the given vertices, relabeled 0..len(vertices)-1 in the given order."""
    relabel = {v: i for i, v in enumerate(vertices)}
    edges = tuple(
        (relabel[u], relabel[v], s)
        for u, v, s in g.edges
        if u in relabel and v in relabel
    )
    return SignedGraph(len(vertices), edges)
