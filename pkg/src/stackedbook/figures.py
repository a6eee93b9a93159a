"""Bundled reference labelings of G_{4,6} and G_{3,6}.

Figure 1 is a span-77 labeling of G_{4,6}.  Figure 2 as printed carries a
span-60 labeling of G_{3,6} with one bad label: the branch-3, page-6 leaf
reads 59 where the block walk yields 49; 59 breaks the radio condition
against 60 (distance 3) and 57 (distance 2).  The corrected variant swaps
in 49 and is valid.

Rows are keyed by branch; branch 1 is the center row, each row lists the
labels for pages 1..6.
"""

from __future__ import annotations

from .graphs import StackedBook, Vertex
from .labeling import Labeling

_FIGURE_1_ROWS = {
    1: (23, 50, 77, 0, 27, 54),
    2: (4, 31, 58, 13, 40, 67),
    3: (10, 37, 64, 19, 46, 73),
    4: (16, 43, 70, 7, 34, 61),
}

_FIGURE_2_PRINTED_ROWS = {
    1: (11, 32, 53, 0, 21, 42),
    2: (4, 25, 46, 15, 36, 57),
    3: (18, 39, 60, 7, 28, 59),
}

_FIGURE_2_CORRECTED_ROWS = {
    1: (11, 32, 53, 0, 21, 42),
    2: (4, 25, 46, 15, 36, 57),
    3: (18, 39, 60, 7, 28, 49),
}

FIGURE_IDS = ("1", "2-printed", "2-corrected")

_FIGURES = {
    "1": (StackedBook(4, 6), _FIGURE_1_ROWS),
    "2-printed": (StackedBook(3, 6), _FIGURE_2_PRINTED_ROWS),
    "2-corrected": (StackedBook(3, 6), _FIGURE_2_CORRECTED_ROWS),
}


def figure_labeling(which: str) -> Labeling:
    """One of the bundled labelings, keyed by FIGURE_IDS."""
    if which not in _FIGURES:
        raise ValueError(f"unknown figure {which!r}; choose from {FIGURE_IDS}")
    book, rows = _FIGURES[which]
    labels = {
        Vertex(branch, page): row[page - 1]
        for branch, row in rows.items()
        for page in range(1, book.n + 1)
    }
    return Labeling(book, labels)
