"""Block-chained radio labelings of stacked-book graphs.

Each block (the two stars at pages i and i + n/2) is labeled by walking an
alternating sequence of its 2m vertices, always stepping by exactly the
radio requirement of the consecutive pair.  Center-involved cross steps
cost p = n/2 + 1 and leaf-leaf cross steps cost q = n/2.  Blocks are then
chained with base labels spaced m*n + 3 apart, which again meets the radio
requirement of the chain pair exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .bounds import block_lower_bound, exact_radio_number, upper_bound_m3
from .graphs import Block, GeneralGraph, StackedBook, Vertex

HIGH = "high"
LOW = "low"


@dataclass(frozen=True)
class Labeling:
    """A total vertex -> non-negative-integer label map over a graph.

    Keys are Vertex instances for a StackedBook and 0-based indices for a
    GeneralGraph.  Duplicate label values are representable (the verifier
    reports them as violations); negative labels are rejected outright.
    """

    graph: StackedBook | GeneralGraph
    labels: Mapping = field(repr=False)

    def __post_init__(self) -> None:
        if not self.labels:
            raise ValueError("labeling has no labels")
        for key, value in self.labels.items():
            if not isinstance(value, int) or value < 0:
                raise ValueError(f"label for {key} must be a non-negative integer, got {value!r}")

    @property
    def f_min(self) -> int:
        return min(self.labels.values())

    @property
    def f_max(self) -> int:
        return max(self.labels.values())

    @property
    def span(self) -> int:
        return self.f_max - self.f_min

    def shifted(self, offset: int) -> "Labeling":
        """The same labeling with every label moved by offset."""
        return Labeling(self.graph, {v: f + offset for v, f in self.labels.items()})


@dataclass(frozen=True)
class BlockScheme:
    """An ordered walk of one block's 2m vertices.

    sequence lists (star role, branch) pairs: role HIGH means the star at
    page i + n/2, LOW the star at page i.  The walk starts at the high
    center, alternates stars, and never repeats a branch on consecutive
    leaf-leaf steps, so every step's distance is n/2 + 1 (center involved,
    increment p) or n/2 + 2 (leaf to leaf, increment q).
    """

    p: int
    q: int
    sequence: tuple[tuple[str, int], ...]

    def __post_init__(self) -> None:
        if self.p != self.q + 1:
            raise ValueError("increments must satisfy p == q + 1")
        if self.sequence[0] != (HIGH, 1):
            raise ValueError("scheme must start at the high-star center")
        if len(set(self.sequence)) != len(self.sequence):
            raise ValueError("scheme revisits a vertex")
        for (role_a, br_a), (role_b, br_b) in zip(self.sequence, self.sequence[1:]):
            if role_a == role_b:
                raise ValueError("scheme must alternate between the two stars")
            if br_a != 1 and br_b != 1 and br_a == br_b:
                raise ValueError("consecutive leaf-leaf steps must change branch")

    def apply(self, book: StackedBook, block: Block, base: int) -> dict[Vertex, int]:
        """Label the block's vertices starting from base.

        Every step adds exactly diam + 1 - d(prev, cur), the radio
        requirement of the consecutive pair, so the walk is as tight as
        the condition allows.
        """
        if not isinstance(base, int) or base < 0:
            raise ValueError(f"base label must be a non-negative integer, got {base!r}")
        labels: dict[Vertex, int] = {}
        current = base
        previous: Vertex | None = None
        for role, branch in self.sequence:
            page = block.high_page if role == HIGH else block.low_page
            vertex = Vertex(branch, page)
            if previous is not None:
                current += book.diameter + 1 - book.distance(previous, vertex)
            labels[vertex] = current
            previous = vertex
        return labels


def scheme_odd(m: int, n: int) -> BlockScheme:
    """Walk for odd m >= 5.

    Forward pass high-1, low-2, high-3, ... up to high-m, then the reversal
    low-3, high-2, low-5, high-4, ..., low-m, high-(m-1), ending at the low
    center.  Increments come out as p, q * (2m-3), p.
    """
    if m % 2 == 0:
        raise ValueError("m must be odd; use scheme_even for even m")
    if m < 5:
        raise ValueError("odd scheme needs m >= 5; use scheme_m3 for m == 3")
    seq: list[tuple[str, int]] = [(HIGH, 1)]
    seq += [(LOW if r % 2 == 0 else HIGH, r) for r in range(2, m + 1)]
    for j in range(1, (m - 1) // 2 + 1):
        seq += [(LOW, 2 * j + 1), (HIGH, 2 * j)]
    seq.append((LOW, 1))
    scheme = BlockScheme(p=n // 2 + 1, q=n // 2, sequence=tuple(seq))
    assert scheme.sequence[-1] == (LOW, 1)
    return scheme


def scheme_even(m: int, n: int) -> BlockScheme:
    """Walk for even m >= 4.

    high-1, then the interleave low-a_j, high-b_j for the branch
    permutations a = (2, 3, ..., m) and b = (m, 2, 3, ..., m-1), ending at
    the low center.  a_j != b_j and b_j != a_{j+1}, so every middle step is
    leaf to leaf with distinct branches.
    """
    if m % 2 == 1:
        raise ValueError("m must be even; use scheme_odd or scheme_m3 for odd m")
    if m < 4:
        raise ValueError(f"even scheme needs m >= 4, got {m}")
    low_order = list(range(2, m + 1))
    high_order = [m] + list(range(2, m))
    seq: list[tuple[str, int]] = [(HIGH, 1)]
    for a, b in zip(low_order, high_order):
        seq += [(LOW, a), (HIGH, b)]
    seq.append((LOW, 1))
    return BlockScheme(p=n // 2 + 1, q=n // 2, sequence=tuple(seq))


def scheme_m3(n: int) -> BlockScheme:
    """Walk for m == 3: high-1, low-2, high-3, low-1, high-2, low-3.

    Unlike the m >= 4 walks this one ends on a leaf, and its increments
    are p, q, p, p, q for a block span of 5n/2 + 3 (one above the block
    lower bound 5n/2 + 2).
    """
    return BlockScheme(p=n // 2 + 1, q=n // 2,
                       sequence=((HIGH, 1), (LOW, 2), (HIGH, 3),
                                 (LOW, 1), (HIGH, 2), (LOW, 3)))


def _scheme_for(m: int, n: int) -> BlockScheme:
    if m == 3:
        return scheme_m3(n)
    if m % 2 == 0:
        return scheme_even(m, n)
    return scheme_odd(m, n)


def _block_of(m: int, n: int, block_index: int) -> tuple[StackedBook, Block]:
    book = StackedBook(m, n)
    if not 1 <= block_index <= book.block_count:
        raise ValueError(f"block index {block_index} out of range 1..{book.block_count}")
    return book, book.blocks()[block_index - 1]


def label_block_odd(m: int, n: int, base: int, block_index: int = 1) -> dict[Vertex, int]:
    """Partial labeling of one block for odd m >= 5, starting at base.

    The low center ends at base + m*n - n/2 + 2.
    """
    if m % 2 == 0:
        raise ValueError("m is even; use label_block_even")
    if m == 3:
        raise ValueError("m == 3 uses its own walk; use label_block_m3")
    book, block = _block_of(m, n, block_index)
    return scheme_odd(m, n).apply(book, block, base)


def label_block_even(m: int, n: int, base: int, block_index: int = 1) -> dict[Vertex, int]:
    """Partial labeling of one block for even m >= 4, starting at base.

    The low center ends at base + m*n - n/2 + 2.
    """
    if m % 2 == 1:
        raise ValueError("m is odd; use label_block_odd (or label_block_m3 for m == 3)")
    book, block = _block_of(m, n, block_index)
    return scheme_even(m, n).apply(book, block, base)


def label_block_m3(n: int, base: int, block_index: int = 1) -> dict[Vertex, int]:
    """Partial labeling of one block of G_{3,n}, starting at base.

    Labels run base, base + n/2+1, base + n+1, base + 3n/2+2, base + 2n+3,
    base + 5n/2+3 along the walk high-1, low-2, high-3, low-1, high-2, low-3.
    """
    book, block = _block_of(3, n, block_index)
    return scheme_m3(n).apply(book, block, base)


def chain_step(m: int, n: int) -> int:
    """Base-to-base spacing between consecutive blocks: m*n + 3."""
    return m * n + 3


def label_graph(book: StackedBook) -> Labeling:
    """A full radio labeling of G_{m,n} with the smallest span the block
    construction achieves: m*n^2/2 + n - 1 for m >= 4 and 3*n^2/2 + n for
    m == 3.

    Block i is based at (i-1)*(m*n + 3); the minimum label is 0 at the
    center of page n/2 + 1.  The output is checked against the verifier
    before returning; a failure there is an internal bug, not bad input.
    """
    from .verify import verify

    m, n = book.m, book.n
    scheme = _scheme_for(m, n)
    step = chain_step(m, n)
    labels: dict[Vertex, int] = {}
    for block in book.blocks():
        labels.update(scheme.apply(book, block, (block.index - 1) * step))
    labeling = Labeling(book, labels)

    expected_span = upper_bound_m3(n) if m == 3 else exact_radio_number(m, n)
    if labeling.span != expected_span:
        raise RuntimeError(
            f"internal error: constructed span {labeling.span} != expected {expected_span}")
    report = verify(book, labeling)
    if not report.valid:
        raise RuntimeError(
            f"internal error: constructed labeling violates the radio condition: "
            f"{report.violations[:3]}")
    return labeling


def block_terminal_offset(m: int, n: int) -> int:
    """Span of one block walk relative to its base."""
    if m == 3:
        return 5 * n // 2 + 3
    return block_lower_bound(m, n)
