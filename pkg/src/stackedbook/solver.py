"""Exact radio-number computation by branch and bound over label orderings.

Vertices are placed in increasing label order.  For a fixed visit order
the componentwise-minimal labels (each new vertex at the smallest value
satisfying every placed constraint) minimize the span of that order, so
the search enumerates orders only and labels each greedily.

Pruning is admissible on three fronts:

* remaining increments: every unplaced vertex w must receive a label
  increment of at least diam + 1 - (max distance from w to any vertex it
  could follow), where the candidates are the still-unplaced vertices and
  the one placed last; the increments stack on top of the current label.
* group spreads: for a declared vertex group (the star pages of a stacked
  book) the labels inside the group must spread by at least the cheapest
  ordering of the group's pairwise requirements, found once by a
  min-Hamiltonian-path DP; a group first touched at label x pushes the
  final span to x plus that spread.
* transpositions: the reachable completions depend only on the placed
  set plus the labels within diameter of the current label (older
  placements can no longer constrain anything), so states revisited with
  the same recent-label window at an equal or higher label are cut.

Hard instances additionally get a deterministic beam dive that hunts for
a strong incumbent before the proof search starts.  The search itself is
single-threaded and fully deterministic; symmetry breaking and the other
prunes change the node count, never the optimal value.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Mapping, Sequence

from .graphs import GeneralGraph, StackedBook, Vertex, build_product_graph
from .labeling import Labeling, label_graph
from .verify import verify

STATUS_OPTIMAL = "optimal"
STATUS_BOUNDED_ONLY = "bounded_only"
STATUS_TIMEOUT = "timeout"

_TIME_CHECK_MASK = 0x3FF
_MEMO_CAP = 5_000_000
_DIVE_MIN_VERTICES = 16
_DIVE_WIDTH_PER_VERTEX = 512


@dataclass(frozen=True)
class SearchConfig:
    """Knobs for the exact search.

    upper_bound_seed prunes against a claimed upper bound; when None,
    solve_stacked_book seeds from the block-construction labeling.
    time_limit is wall-clock seconds; on expiry the best labeling found so
    far is returned with status "timeout".
    """

    upper_bound_seed: int | None = None
    time_limit: float | None = None
    symmetry_breaking: bool = True


@dataclass(frozen=True)
class SymmetryInfo:
    """Automorphism hints for the search.

    first_candidates restricts the vertex that takes the minimum label to
    one representative per orbit.  family/slot encode interchangeable
    vertex families: two candidates with equal slot whose (distinct)
    families are both untouched lead to isomorphic subtrees, so only the
    first is explored.  Vertices outside any family carry family -1.
    """

    first_candidates: tuple[int, ...]
    family: tuple[int, ...]
    slot: tuple[int, ...]


@dataclass(frozen=True)
class SearchResult:
    """nodes_explored counts branch-and-bound placements (the incumbent
    dive, when it runs, is not included)."""

    status: str
    radio_number: int
    witness: Labeling
    nodes_explored: int


def _greedy_labels(req: list[list[int]], order: range) -> dict[int, int]:
    """Sequential minimal labels along a fixed order; always a valid labeling."""
    labels: dict[int, int] = {}
    for v in order:
        labels[v] = max((labels[u] + req[u][v] for u in labels), default=0)
    return labels


def _min_internal_spread(req: list[list[int]], group: Sequence[int]) -> int:
    """Cheapest label spread the group admits on its own: the minimum
    Hamiltonian path through the group's pairwise requirements."""
    size = len(group)
    if size <= 1:
        return 0
    big = 1 << 60
    dp = [[big] * size for _ in range(1 << size)]
    for i in range(size):
        dp[1 << i][i] = 0
    for mask in range(1, 1 << size):
        row = dp[mask]
        for last in range(size):
            cost = row[last]
            if cost >= big or not mask >> last & 1:
                continue
            req_last = req[group[last]]
            for nxt in range(size):
                if mask >> nxt & 1:
                    continue
                cand = cost + req_last[group[nxt]]
                nm = mask | 1 << nxt
                if cand < dp[nm][nxt]:
                    dp[nm][nxt] = cand
    return min(dp[(1 << size) - 1])


def _beam_dive(count: int, req: list[list[int]], diam: int,
               first_candidates: Sequence[int], width: int) -> dict[int, int]:
    """Deterministic beam search for a low-span labeling.

    Keeps the `width` most promising partial states per level, deduplicated
    by (placed set, recent-label window).  Returns the best complete
    labeling found.
    """
    states: list[tuple[int, int, tuple[int, ...], tuple[tuple[int, int], ...]]] = [
        (0, 1 << v, tuple(req[v]), ((v, 0),)) for v in sorted(first_candidates)
    ]
    for _ in range(count - 1):
        expanded = []
        for value, mask, next_labels, path in states:
            for w in range(count):
                if mask >> w & 1:
                    continue
                val = next_labels[w]
                req_w = req[w]
                child = tuple(
                    nl if nl >= val + rw else val + rw
                    for nl, rw in zip(next_labels, req_w)
                )
                expanded.append((val, mask | 1 << w, child, path + ((w, val),)))
        expanded.sort()
        seen = set()
        kept = []
        for state in expanded:
            val, mask, _, path = state
            window = tuple(sorted((v, val - f) for v, f in path if val - f < diam))
            key = (mask, window)
            if key in seen:
                continue
            seen.add(key)
            kept.append(state)
            if len(kept) >= width:
                break
        states = kept
    best = min(states)
    return dict(best[3])


def book_symmetry(book: StackedBook) -> SymmetryInfo:
    """Symmetry hints for S_m x P_n.

    Leaf branches 2..m are interchangeable (family = branch, slot = page)
    and the page reflection j -> n+1-j folds the first placement into
    pages 1..n/2 on branches 1 and 2.
    """
    first = [
        book.vertex_index(Vertex(branch, page))
        for page in range(1, book.n // 2 + 1)
        for branch in (1, 2)
    ]
    family = []
    slot = []
    for index in range(book.vertex_count):
        v = book.vertex_at(index)
        family.append(v.branch if v.branch >= 2 else -1)
        slot.append(v.page)
    return SymmetryInfo(tuple(sorted(first)), tuple(family), tuple(slot))


def book_spread_groups(book: StackedBook) -> tuple[tuple[int, ...], ...]:
    """The star pages, whose internal requirements force a label spread."""
    return tuple(
        tuple(book.vertex_index(Vertex(branch, page)) for branch in range(1, book.m + 1))
        for page in range(1, book.n + 1)
    )


def solve_exact(
    graph: GeneralGraph,
    config: SearchConfig | None = None,
    *,
    symmetry: SymmetryInfo | None = None,
    seed_witness: Mapping[int, int] | None = None,
    spread_groups: Sequence[Sequence[int]] | None = None,
) -> SearchResult:
    """Exact radio number of a connected graph by branch and bound.

    Returns status "optimal" with the true radio number and a verified
    witness labeling unless the time limit expires ("timeout", best
    incumbent returned) or an integer upper_bound_seed below the true
    radio number exhausts the bounded search ("bounded_only").
    """
    config = config or SearchConfig()
    count = graph.vertex_count
    matrix = graph.distance_matrix  # raises on disconnected input
    diam = max(max(row) for row in matrix)

    seed = config.upper_bound_seed
    if seed is not None and seed < count - 1:
        raise ValueError(f"upper bound seed {seed} below the trivial bound {count - 1}")

    if count == 1:
        witness = Labeling(graph, {0: 0})
        return SearchResult(STATUS_OPTIMAL, 0, witness, 0)

    req = [[diam + 1 - matrix[u][v] if u != v else 0 for v in range(count)]
           for u in range(count)]

    use_symmetry = config.symmetry_breaking and symmetry is not None
    family = symmetry.family if use_symmetry else (-1,) * count
    slot = symmetry.slot if use_symmetry else (0,) * count
    family_touched = {f: 0 for f in family if f >= 0}
    if use_symmetry:
        first_candidates = symmetry.first_candidates
    else:
        first_candidates = tuple(range(count))

    group_of = [-1] * count
    spreads: list[int] = []
    if spread_groups:
        for gid, group in enumerate(spread_groups):
            spreads.append(_min_internal_spread(req, group))
            for v in group:
                group_of[v] = gid
    group_min: list[int | None] = [None] * len(spreads)
    untouched = len(spreads)

    if seed_witness is not None:
        incumbent = dict(seed_witness)
    else:
        incumbent = _greedy_labels(req, range(count))
    incumbent_span = max(incumbent.values()) - min(incumbent.values())

    if count >= _DIVE_MIN_VERTICES:
        dived = _beam_dive(count, req, diam, first_candidates,
                           _DIVE_WIDTH_PER_VERTEX * count)
        dived_span = max(dived.values())
        if dived_span < incumbent_span:
            incumbent, incumbent_span = dived, dived_span

    threshold = incumbent_span
    if seed is not None:
        threshold = min(threshold, seed + 1)

    full_mask = (1 << count) - 1
    labels = [0] * count
    path: list[tuple[int, int]] = []
    memo: dict[int, int] = {}
    window_bits = max(diam.bit_length() + 1, 4)
    vertex_bits = count.bit_length() + 1
    nodes = 0
    timed_out = False
    deadline = None
    if config.time_limit is not None:
        deadline = time.monotonic() + config.time_limit

    best_labels = incumbent
    best_span = incumbent_span

    def descend(mask: int, next_labels: list[int], last_label: int,
                last_vertex: int, touched_group_bound: int) -> None:
        nonlocal nodes, threshold, best_labels, best_span, timed_out
        if timed_out:
            return
        nodes += 1
        if deadline is not None and nodes & _TIME_CHECK_MASK == 0 \
                and time.monotonic() > deadline:
            timed_out = True
            return

        # transposition cut: completions depend only on the placed set and
        # the labels within diam of the current one
        key = mask
        for v, f in reversed(path):
            offset = last_label - f
            if offset >= diam:
                break
            key = (key << vertex_bits | v) << window_bits | offset
        seen = memo.get(key)
        if seen is not None:
            if seen <= last_label:
                return
            memo[key] = last_label
        elif len(memo) < _MEMO_CAP:
            memo[key] = last_label

        remaining = [v for v in range(count) if not mask >> v & 1]

        # smallest possible increment into each remaining vertex, over the
        # predecessors still available to it
        dyn: dict[int, int] = {}
        dyn_sum = 0
        for w in remaining:
            row = matrix[w]
            far = row[last_vertex]
            for u in remaining:
                if u != w and row[u] > far:
                    far = row[u]
            need = diam + 1 - far
            dyn[w] = need
            dyn_sum += need

        # the two largest spreads among untouched groups, for the star bound
        top_spread = second_spread = 0
        top_gid = -1
        for gid, spread in enumerate(spreads):
            if group_min[gid] is None:
                if spread > top_spread:
                    second_spread = top_spread
                    top_spread, top_gid = spread, gid
                elif spread > second_spread:
                    second_spread = spread

        fresh_slots: dict[int, int] = {}
        candidates: list[tuple[int, int]] = []
        for v in remaining:
            fam = family[v]
            if fam >= 0 and not family_touched[fam]:
                slot_key = slot[v]
                if slot_key in fresh_slots:
                    continue  # isomorphic to the branch kept for this slot
                fresh_slots[slot_key] = v
            value = next_labels[v]
            if value + dyn_sum - dyn[v] >= threshold:
                continue
            gid = group_of[v]
            group_bound = touched_group_bound
            untouched_after = untouched
            remaining_top = top_spread
            if gid >= 0 and group_min[gid] is None:
                group_bound = max(group_bound, value + spreads[gid])
                untouched_after -= 1
                if gid == top_gid:
                    remaining_top = second_spread
            if untouched_after > 0 and value + 1 + remaining_top >= threshold:
                continue
            if group_bound >= threshold:
                continue
            candidates.append((value, v))
        candidates.sort()

        for value, v in candidates:
            if value + dyn_sum - dyn[v] >= threshold:
                continue
            new_mask = mask | 1 << v
            labels[v] = value
            if new_mask == full_mask:
                if value < threshold:
                    best_labels = {u: labels[u] for u in range(count)}
                    best_span = value
                    threshold = value
                continue
            gid = group_of[v]
            first_touch = gid >= 0 and group_min[gid] is None
            bound_below = touched_group_bound
            if first_touch:
                group_min[gid] = value
                untouched -= 1
                bound_below = max(bound_below, value + spreads[gid])
            if bound_below < threshold:
                fam = family[v]
                if fam >= 0:
                    family_touched[fam] += 1
                req_v = req[v]
                child = [nl if nl >= value + rv else value + rv
                         for nl, rv in zip(next_labels, req_v)]
                path.append((v, value))
                descend(new_mask, child, value, v, bound_below)
                path.pop()
                if fam >= 0:
                    family_touched[fam] -= 1
            if first_touch:
                group_min[gid] = None
                untouched += 1
            if timed_out:
                return

    static_min = [diam + 1 - max(matrix[v]) for v in range(count)]
    static_sum = sum(static_min)
    for v in first_candidates:
        if timed_out:
            break
        if static_sum - static_min[v] >= threshold:
            continue
        labels[v] = 0
        gid = group_of[v]
        first_touch = gid >= 0
        if first_touch:
            group_min[gid] = 0
            untouched -= 1
        fam = family[v]
        if fam >= 0:
            family_touched[fam] += 1
        path.append((v, 0))
        descend(1 << v, list(req[v]), 0, v, spreads[gid] if gid >= 0 else 0)
        path.pop()
        if fam >= 0:
            family_touched[fam] -= 1
        if first_touch:
            group_min[gid] = None
            untouched += 1

    witness = Labeling(graph, best_labels)
    report = verify(graph, witness)
    if not report.valid:
        raise RuntimeError("internal error: search produced an invalid witness")
    if report.span != best_span:
        raise RuntimeError("internal error: witness span mismatch")

    if timed_out:
        status = STATUS_TIMEOUT
    elif seed is not None and best_span > seed:
        status = STATUS_BOUNDED_ONLY  # proved only rn > seed
    else:
        status = STATUS_OPTIMAL
    return SearchResult(status, best_span, witness, nodes)


def solve_stacked_book(book: StackedBook, config: SearchConfig | None = None) -> SearchResult:
    """Exact search on G_{m,n}: expands the product graph, seeds the
    incumbent from the block-construction labeling (unless an explicit
    integer seed is configured), declares the star pages as spread groups
    and enables symmetry breaking.
    """
    config = config or SearchConfig()
    product = build_product_graph(book)

    seed_witness = None
    if config.upper_bound_seed is None:
        constructed = label_graph(book)
        seed_witness = {book.vertex_index(v): f for v, f in constructed.labels.items()}

    symmetry = book_symmetry(book) if config.symmetry_breaking else None
    result = solve_exact(product, config, symmetry=symmetry, seed_witness=seed_witness,
                         spread_groups=book_spread_groups(book))

    vertex_labels = {book.vertex_at(i): f for i, f in result.witness.labels.items()}
    witness = Labeling(book, vertex_labels)
    report = verify(book, witness)
    if not report.valid:
        raise RuntimeError("internal error: witness invalid after index translation")
    return SearchResult(result.status, result.radio_number, witness, result.nodes_explored)
