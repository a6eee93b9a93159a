"""JSON wire formats for graphs and labelings.

Graph: {"type": "stacked_book", "m": M, "n": N}
       or {"type": "general", "vertices": V, "edges": [[a, b], ...]}
Labeling over a stacked book:
       {"m": M, "n": N, "span": S, "labels": [{"branch": k, "page": j, "f": v}, ...]}
       with entries sorted by f ascending; all values bit-exact integers.
Labeling over a general graph uses {"vertex": i, "f": v} entries plus a
"vertices" count instead of m and n.
"""

from __future__ import annotations

import json
from typing import Any

from .graphs import GeneralGraph, StackedBook, Vertex
from .labeling import Labeling


class FormatError(ValueError):
    """Malformed or schema-violating input document."""


def graph_to_json(graph: StackedBook | GeneralGraph) -> dict:
    if isinstance(graph, StackedBook):
        return {"type": "stacked_book", "m": graph.m, "n": graph.n}
    if isinstance(graph, GeneralGraph):
        return {
            "type": "general",
            "vertices": graph.vertex_count,
            "edges": [[a, b] for a, b in graph.edges()],
        }
    raise TypeError(f"unsupported graph type: {type(graph).__name__}")


def graph_from_json(data: Any) -> StackedBook | GeneralGraph:
    if not isinstance(data, dict):
        raise FormatError("graph document must be a JSON object")
    kind = data.get("type")
    if kind == "stacked_book":
        _require_keys(data, {"type", "m", "n"})
        _require_int(data, "m")
        _require_int(data, "n")
        try:
            return StackedBook(data["m"], data["n"])
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    if kind == "general":
        _require_keys(data, {"type", "vertices", "edges"})
        _require_int(data, "vertices")
        edges = data["edges"]
        if not isinstance(edges, list) or not all(
                isinstance(e, list) and len(e) == 2 and all(isinstance(x, int) for x in e)
                for e in edges):
            raise FormatError('"edges" must be a list of [a, b] integer pairs')
        try:
            return GeneralGraph(data["vertices"], [tuple(e) for e in edges])
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    raise FormatError(f'unknown graph "type": {kind!r}')


def labeling_to_json(labeling: Labeling) -> dict:
    graph = labeling.graph
    if isinstance(graph, StackedBook):
        entries = [
            {"branch": v.branch, "page": v.page, "f": f}
            for v, f in sorted(labeling.labels.items(), key=lambda item: (item[1], item[0]))
        ]
        return {"m": graph.m, "n": graph.n, "span": labeling.span, "labels": entries}
    entries = [
        {"vertex": v, "f": f}
        for v, f in sorted(labeling.labels.items(), key=lambda item: (item[1], item[0]))
    ]
    return {"vertices": graph.vertex_count, "span": labeling.span, "labels": entries}


def labeling_from_json(data: Any, graph: StackedBook | GeneralGraph | None = None) -> Labeling:
    """Parse a labeling document.

    Stacked-book documents are self-describing via m and n; general-graph
    documents need the graph supplied (their JSON carries no edges).
    """
    if not isinstance(data, dict):
        raise FormatError("labeling document must be a JSON object")
    if "m" in data or "n" in data:
        _require_keys(data, {"m", "n", "span", "labels"})
        _require_int(data, "m")
        _require_int(data, "n")
        try:
            book = StackedBook(data["m"], data["n"])
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
        if graph is not None and graph != book:
            raise FormatError(f"labeling is for G_({book.m},{book.n}), "
                              f"which does not match the supplied graph")
        labels: dict = {}
        for entry in _entries(data):
            if set(entry) != {"branch", "page", "f"}:
                raise FormatError(f"bad label entry keys: {sorted(entry)}")
            _require_int(entry, "branch")
            _require_int(entry, "page")
            _require_int(entry, "f")
            vertex = Vertex(entry["branch"], entry["page"])
            if vertex in labels:
                raise FormatError(f"duplicate label entry for vertex {vertex}")
            labels[vertex] = entry["f"]
        _require_int(data, "span")
        return _build(book, labels, data["span"])
    _require_keys(data, {"vertices", "span", "labels"})
    _require_int(data, "vertices")
    if graph is None:
        raise FormatError("general-graph labeling needs an explicit graph "
                          "(the document carries no edges)")
    if not isinstance(graph, GeneralGraph) or graph.vertex_count != data["vertices"]:
        raise FormatError(f'labeling "vertices" ({data["vertices"]}) does not match '
                          f"the supplied graph")
    labels = {}
    for entry in _entries(data):
        if set(entry) != {"vertex", "f"}:
            raise FormatError(f"bad label entry keys: {sorted(entry)}")
        _require_int(entry, "vertex")
        _require_int(entry, "f")
        if entry["vertex"] in labels:
            raise FormatError(f"duplicate label entry for vertex {entry['vertex']}")
        labels[entry["vertex"]] = entry["f"]
    _require_int(data, "span")
    return _build(graph, labels, data["span"])


def dumps(document: dict) -> str:
    return json.dumps(document, indent=2) + "\n"


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc


def _entries(data: dict) -> list[dict]:
    entries = data["labels"]
    if not isinstance(entries, list) or not all(isinstance(e, dict) for e in entries):
        raise FormatError('"labels" must be a list of objects')
    return entries


def _build(graph, labels, declared_span: int | None = None) -> Labeling:
    try:
        labeling = Labeling(graph, labels)
    except ValueError as exc:
        raise FormatError(str(exc)) from exc
    if declared_span is not None and labeling.span != declared_span:
        raise FormatError(f'declared "span" {declared_span} does not match '
                          f"the labels (actual {labeling.span})")
    return labeling


def _require_keys(data: dict, keys: set[str]) -> None:
    if set(data) != keys:
        raise FormatError(f"expected keys {sorted(keys)}, got {sorted(data)}")


def _require_int(data: dict, key: str) -> None:
    value = data.get(key)
    if not isinstance(value, int) or isinstance(value, bool):
        raise FormatError(f'"{key}" must be an integer, got {value!r}')
