import json

import pytest

from stackedbook.figures import figure_labeling
from stackedbook.graphs import GeneralGraph, StackedBook, path_graph
from stackedbook.labeling import Labeling, label_graph
from stackedbook.serialize import (
    FormatError,
    dumps,
    graph_from_json,
    graph_to_json,
    labeling_from_json,
    labeling_to_json,
    loads,
)


def test_labeling_schema_shape():
    lab = label_graph(StackedBook(4, 2))
    doc = labeling_to_json(lab)
    assert set(doc) == {"m", "n", "span", "labels"}
    assert doc["m"] == 4 and doc["n"] == 2 and doc["span"] == 9
    assert all(set(entry) == {"branch", "page", "f"} for entry in doc["labels"])
    fs = [entry["f"] for entry in doc["labels"]]
    assert fs == sorted(fs)
    assert all(isinstance(entry["f"], int) for entry in doc["labels"])


def test_labeling_round_trip():
    lab = figure_labeling("1")
    restored = labeling_from_json(json.loads(dumps(labeling_to_json(lab))))
    assert restored.graph == lab.graph
    assert dict(restored.labels) == dict(lab.labels)


def test_general_labeling_round_trip():
    path = path_graph(4)
    lab = Labeling(path, {0: 2, 1: 5, 2: 0, 3: 3})
    doc = labeling_to_json(lab)
    assert set(doc) == {"vertices", "span", "labels"}
    restored = labeling_from_json(doc, graph=path)
    assert dict(restored.labels) == dict(lab.labels)
    with pytest.raises(FormatError, match="explicit graph"):
        labeling_from_json(doc)


def test_graph_schema_round_trip():
    book = StackedBook(5, 4)
    assert graph_from_json(graph_to_json(book)) == book
    gg = GeneralGraph(4, [(0, 1), (1, 2), (2, 3)])
    restored = graph_from_json(graph_to_json(gg))
    assert isinstance(restored, GeneralGraph)
    assert restored.adjacency == gg.adjacency


def test_malformed_documents():
    with pytest.raises(FormatError):
        loads("{not json")
    with pytest.raises(FormatError):
        graph_from_json({"type": "mystery"})
    with pytest.raises(FormatError):
        graph_from_json({"type": "stacked_book", "m": 4})
    with pytest.raises(FormatError):
        graph_from_json({"type": "general", "vertices": 3, "edges": [[0, 0, 0]]})
    with pytest.raises(FormatError):
        labeling_from_json({"m": 4, "n": 5, "span": 0, "labels": []})
    with pytest.raises(FormatError):
        labeling_from_json([1, 2, 3])


def test_declared_span_checked():
    doc = labeling_to_json(label_graph(StackedBook(4, 2)))
    doc["span"] = doc["span"] + 1
    with pytest.raises(FormatError, match="span"):
        labeling_from_json(doc)


def test_duplicate_entry_rejected():
    doc = labeling_to_json(label_graph(StackedBook(4, 2)))
    doc["labels"].append(dict(doc["labels"][0]))
    with pytest.raises(FormatError, match="duplicate"):
        labeling_from_json(doc)


def test_graph_mismatch_rejected():
    doc = labeling_to_json(label_graph(StackedBook(4, 2)))
    with pytest.raises(FormatError, match="does not match"):
        labeling_from_json(doc, graph=StackedBook(4, 4))
