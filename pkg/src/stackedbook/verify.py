"""Radio-condition verification for labelings of stacked-book or general graphs.

The condition: |f(u) - f(v)| >= diam(G) + 1 - d(u, v) for every pair of
distinct vertices.  This module is the ground-truth referee for the
labeler and the exact solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING, Mapping

from .graphs import GeneralGraph, StackedBook, Vertex

if TYPE_CHECKING:
    from .labeling import Labeling


@dataclass(frozen=True)
class Violation:
    """One failing pair: actual_gap < required_gap = diam + 1 - distance."""

    u: object
    v: object
    distance: int
    required_gap: int
    actual_gap: int


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    span: int
    f_min: int
    f_max: int
    violations: tuple[Violation, ...]


def _labels_of(labeling) -> Mapping:
    labels = getattr(labeling, "labels", labeling)
    if not labels:
        raise ValueError("labeling has no labels")
    return labels


def _check_total(labels: Mapping, expected: list) -> None:
    expected_set = set(expected)
    missing = [v for v in expected if v not in labels]
    if missing:
        shown = ", ".join(str(v) for v in missing[:8])
        raise ValueError(f"labeling is partial: {len(missing)} unlabeled vertices ({shown}"
                         + (", ..." if len(missing) > 8 else "") + ")")
    unknown = [k for k in labels if k not in expected_set]
    if unknown:
        raise ValueError(f"labeling has labels for unknown vertices: {unknown[:8]}")
    for key, value in labels.items():
        if not isinstance(value, int) or value < 0:
            raise ValueError(f"label for {key} must be a non-negative integer, got {value!r}")


def verify(graph: StackedBook | GeneralGraph, labeling) -> VerificationReport:
    """Check a labeling against the radio condition on all unordered pairs.

    Accepts a Labeling or a plain mapping.  For a StackedBook the keys are
    Vertex instances and distances use the closed form; for a GeneralGraph
    the keys are 0-based indices and distances come from the cached BFS
    matrix.  Every failing pair is reported, sorted by deficit (worst
    first) and then by vertex order, so the report is independent of the
    mapping's iteration order.
    """
    labels = _labels_of(labeling)

    if isinstance(graph, StackedBook):
        vertices: list = graph.vertices()
        diam = graph.diameter
        dist = graph.distance
    elif isinstance(graph, GeneralGraph):
        vertices = list(range(graph.vertex_count))
        matrix = graph.distance_matrix
        diam = graph.diameter()
        dist = lambda a, b: matrix[a][b]
    else:
        raise TypeError(f"unsupported graph type: {type(graph).__name__}")

    _check_total(labels, vertices)

    violations: list[Violation] = []
    count = len(vertices)
    for i in range(count):
        u = vertices[i]
        fu = labels[u]
        for j in range(i + 1, count):
            v = vertices[j]
            d = dist(u, v)
            required = diam + 1 - d
            actual = abs(fu - labels[v])
            if actual < required:
                violations.append(Violation(u, v, d, required, actual))
    violations.sort(key=lambda x: (x.actual_gap - x.required_gap, x.u, x.v))

    values = list(labels.values())
    f_min, f_max = min(values), max(values)
    return VerificationReport(
        valid=not violations,
        span=f_max - f_min,
        f_min=f_min,
        f_max=f_max,
        violations=tuple(violations),
    )


def per_star_spread(book: StackedBook, labeling) -> list[int]:
    """Max minus min label within each star page, for pages 1..n."""
    labels = _labels_of(labeling)
    _check_total(labels, book.vertices())
    spreads = []
    for page in range(1, book.n + 1):
        page_labels = [labels[Vertex(branch, page)] for branch in range(1, book.m + 1)]
        spreads.append(max(page_labels) - min(page_labels))
    return spreads
