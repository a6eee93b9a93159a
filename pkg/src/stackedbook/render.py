"""Renderers for stacked-book labelings: text grid, DOT, TikZ, CSV, matplotlib.

All layouts follow the page-column, branch-row convention with the center
row (branch 1) marked.  Output is deterministic for a given labeling.
"""

from __future__ import annotations

import io
from pathlib import Path

from .graphs import StackedBook, Vertex
from .labeling import Labeling

# Display order for branch rows: branch 2 above the marked center row,
# remaining leaf branches below it.
def _row_order(m: int) -> list[int]:
    return [2, 1] + list(range(3, m + 1))


def _book_of(labeling: Labeling) -> StackedBook:
    if not isinstance(labeling.graph, StackedBook):
        raise TypeError("rendering needs a stacked-book labeling")
    return labeling.graph


def render_text(labeling: Labeling) -> str:
    """Grid of labels, one row per branch (center row starred), plus a span line."""
    book = _book_of(labeling)
    width = max(len(str(labeling.f_max)), len(str(book.n)))
    lines = ["page      " + "  ".join(f"{j:>{width}}" for j in range(1, book.n + 1))]
    for branch in range(1, book.m + 1):
        mark = "*" if branch == 1 else " "
        row = "  ".join(
            f"{labeling.labels[Vertex(branch, j)]:>{width}}" for j in range(1, book.n + 1)
        )
        lines.append(f"branch {branch:>2}{mark} {row}")
    lines.append(f"span={labeling.span}")
    return "\n".join(lines) + "\n"


def render_csv(labeling: Labeling, delimiter: str = ",") -> str:
    """Delimited rows branch,page,label sorted by label ascending."""
    book = _book_of(labeling)
    out = io.StringIO()
    out.write(delimiter.join(("branch", "page", "label")) + "\n")
    for v, f in sorted(labeling.labels.items(), key=lambda item: (item[1], item[0])):
        out.write(delimiter.join((str(v.branch), str(v.page), str(f))) + "\n")
    return out.getvalue()


def _positions(book: StackedBook) -> dict[Vertex, tuple[float, float]]:
    rows = _row_order(book.m)
    ys = {branch: float(len(rows) - 1 - i) for i, branch in enumerate(rows)}
    return {
        Vertex(branch, page): (1.5 * (page - 1), ys[branch])
        for branch in range(1, book.m + 1)
        for page in range(1, book.n + 1)
    }


def _edge_list(book: StackedBook) -> list[tuple[Vertex, Vertex]]:
    edges = []
    for j in range(1, book.n + 1):
        for k in range(2, book.m + 1):
            edges.append((Vertex(1, j), Vertex(k, j)))
    for j in range(1, book.n):
        for k in range(1, book.m + 1):
            edges.append((Vertex(k, j), Vertex(k, j + 1)))
    return edges


def render_dot(labeling: Labeling) -> str:
    """Graphviz DOT with pinned positions (render with neato -n)."""
    book = _book_of(labeling)
    pos = _positions(book)
    lines = [f"graph stacked_book_{book.m}_{book.n} {{", "  node [shape=circle];"]
    for v in book.vertices():
        x, y = pos[v]
        shape = ', shape=doublecircle' if v.branch == 1 else ""
        lines.append(
            f'  b{v.branch}p{v.page} [label="{labeling.labels[v]}", pos="{x:.1f},{y:.1f}!"{shape}];'
        )
    for u, v in _edge_list(book):
        lines.append(f"  b{u.branch}p{u.page} -- b{v.branch}p{v.page};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_tikz(labeling: Labeling) -> str:
    """TikZ picture with stars as columns and the center row doubled."""
    book = _book_of(labeling)
    pos = _positions(book)
    lines = ["\\begin{tikzpicture}"]
    for v in book.vertices():
        x, y = pos[v]
        style = "draw, circle, double" if v.branch == 1 else "draw, circle"
        lines.append(
            f"  \\node [{style}] (b{v.branch}p{v.page}) at ({x:.1f},{y:.1f})"
            f" {{\\tiny {labeling.labels[v]}}};"
        )
    for u, v in _edge_list(book):
        lines.append(f"  \\draw (b{u.branch}p{u.page}) to (b{v.branch}p{v.page});")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def save_plot(labeling: Labeling, path: str | Path, dpi: int = 150) -> Path:
    """Draw the labeled graph with matplotlib and write it to path.

    The file format follows the path suffix (png, svg, pdf, ...).
    """
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    book = _book_of(labeling)
    pos = _positions(book)
    fig, ax = plt.subplots(figsize=(1.1 * book.n + 1.2, 0.9 * book.m + 1.0))
    for u, v in _edge_list(book):
        (x0, y0), (x1, y1) = pos[u], pos[v]
        ax.plot([x0, x1], [y0, y1], color="0.55", linewidth=0.9, zorder=1)
    for v, (x, y) in pos.items():
        center = v.branch == 1
        ax.scatter([x], [y], s=560, facecolor="white",
                   edgecolor="black", linewidths=1.6 if center else 0.9, zorder=2)
        ax.annotate(str(labeling.labels[v]), (x, y),
                    ha="center", va="center", fontsize=8, zorder=3)
    ax.set_title(f"$G_{{{book.m},{book.n}}}$  span {labeling.span}")
    ax.set_aspect("equal")
    ax.axis("off")
    fig.tight_layout()
    out = Path(path)
    fig.savefig(out, dpi=dpi)
    plt.close(fig)
    return out
