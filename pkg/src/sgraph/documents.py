"""JSON document formats for graphs and switchings, plus DOT export.

Graph documents carry {"n", "edges", optional "name", optional "vertex_labels"};
witness documents carry {"k", "zeta"}. Serialization is deterministic so that
identical inputs produce identical bytes.
"""

import json
from dataclasses import dataclass

from .bdim import KSwitching
from .core import SignedGraph, build_graph


class DocumentError(ValueError):
    """Document text does not match the expected schema."""


def _load_object(text: str, what: str) -> dict:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{what} is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise DocumentError(f"{what} must be a JSON object")
    return raw


@dataclass(frozen=True)
class GraphDocument:
    graph: SignedGraph
    name: str | None = None
    vertex_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.vertex_labels is not None and len(self.vertex_labels) != self.graph.n:
            raise DocumentError(
                f"{len(self.vertex_labels)} vertex labels for {self.graph.n} vertices"
            )

    def to_json(self) -> str:
        doc: dict = {
            "n": self.graph.n,
            "edges": [[u, v, s] for u, v, s in self.graph.edges],
        }
        if self.name is not None:
            doc["name"] = self.name
        if self.vertex_labels is not None:
            doc["vertex_labels"] = list(self.vertex_labels)
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "GraphDocument":
        raw = _load_object(text, "graph document")
        unknown = set(raw) - {"n", "edges", "name", "vertex_labels"}
        if unknown:
            raise DocumentError(f"unknown graph document keys: {sorted(unknown)}")
        n = raw.get("n")
        edges = raw.get("edges")
        if not isinstance(n, int) or isinstance(n, bool):
            raise DocumentError('"n" must be an integer')
        if not isinstance(edges, list):
            raise DocumentError('"edges" must be a list of [u, v, sign] triples')
        for e in edges:
            if not (
                isinstance(e, list)
                and len(e) == 3
                and all(isinstance(x, int) and not isinstance(x, bool) for x in e)
            ):
                raise DocumentError(f"bad edge entry {e!r}")
        name = raw.get("name")
        if name is not None and not isinstance(name, str):
            raise DocumentError('"name" must be a string')
        labels = raw.get("vertex_labels")
        if labels is not None:
            if not (isinstance(labels, list) and all(isinstance(x, str) for x in labels)):
                raise DocumentError('"vertex_labels" must be a list of strings')
            labels = tuple(labels)
        graph = build_graph(n, edges)
        return cls(graph, name, labels)


@dataclass(frozen=True)
class WitnessDocument:
    switching: KSwitching

    def to_json(self) -> str:
        doc = {
            "k": self.switching.k,
            "zeta": [list(vec) for vec in self.switching.vectors],
        }
        return json.dumps(doc, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "WitnessDocument":
        raw = _load_object(text, "witness document")
        unknown = set(raw) - {"k", "zeta"}
        if unknown:
            raise DocumentError(f"unknown witness document keys: {sorted(unknown)}")
        k = raw.get("k")
        zeta = raw.get("zeta")
        if not isinstance(k, int) or isinstance(k, bool):
            raise DocumentError('"k" must be an integer')
        if not isinstance(zeta, list):
            raise DocumentError('"zeta" must be a list of vectors')
        for vec in zeta:
            if not (
                isinstance(vec, list)
                and all(isinstance(x, int) and not isinstance(x, bool) for x in vec)
            ):
                raise DocumentError(f"bad vector entry {vec!r}")
        try:
            switching = KSwitching(k, tuple(tuple(vec) for vec in zeta))
        except ValueError as exc:
            raise DocumentError(str(exc)) from exc
        return cls(switching)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(doc: GraphDocument) -> str:
    """DOT rendering: positive edges solid, negative edges dashed.

    Output is byte-deterministic for a given document (stable ordering).
    """
    g = doc.graph
    lines = [f"graph {_quote(doc.name or 'signed-graph')} {{"]
    for v in range(g.n):
        if doc.vertex_labels is not None:
            lines.append(f"  {v} [label={_quote(doc.vertex_labels[v])}];")
        else:
            lines.append(f"  {v};")
    for u, v, s in g.edges:
        style = "solid" if s == 1 else "dashed"
        lines.append(f"  {u} -- {v} [style={style}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
