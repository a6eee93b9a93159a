import pytest

from stackedbook.bounds import exact_radio_number, upper_bound_m3
from stackedbook.graphs import StackedBook, Vertex
from stackedbook.labeling import (
    Labeling,
    chain_step,
    label_block_even,
    label_block_m3,
    label_block_odd,
    label_graph,
    scheme_even,
    scheme_m3,
    scheme_odd,
)
from stackedbook.verify import verify


def test_label_block_odd_examples():
    block = label_block_odd(5, 4, base=0)
    # low-star center terminates at base + m*n - n/2 + 2
    assert block[Vertex(1, 1)] == 20
    # first step goes to a low leaf at base + n/2 + 1
    assert block[Vertex(2, 1)] == 3
    assert block[Vertex(1, 3)] == 0  # high-star center takes the base

    block2 = label_block_odd(7, 6, base=10)
    assert block2[Vertex(1, 1)] == 10 + 42 - 3 + 2 == 51


def test_label_block_odd_rejects_wrong_m():
    with pytest.raises(ValueError, match="label_block_even"):
        label_block_odd(4, 6, base=0)
    with pytest.raises(ValueError, match="label_block_m3"):
        label_block_odd(3, 6, base=0)


def test_label_block_even_examples():
    block = label_block_even(4, 6, base=0)
    assert sorted(block.values()) == [0, 4, 7, 10, 13, 16, 19, 23]
    assert block[Vertex(1, 1)] == 23
    assert block[Vertex(1, 4)] == 0

    block2 = label_block_even(6, 4, base=0)
    assert block2[Vertex(1, 1)] == 24 - 2 + 2 == 24
    with pytest.raises(ValueError, match="label_block_odd"):
        label_block_even(5, 4, base=0)


def test_label_block_m3_examples():
    block = label_block_m3(6, base=42, block_index=3)
    assert block == {
        Vertex(1, 6): 42,
        Vertex(2, 3): 46,
        Vertex(3, 6): 49,
        Vertex(1, 3): 53,
        Vertex(2, 6): 57,
        Vertex(3, 3): 60,
    }
    assert label_block_m3(2, base=0)[Vertex(3, 1)] == 8
    assert sorted(label_block_m3(4, base=0).values()) == [0, 3, 5, 8, 11, 13]


def test_block_terminal_offset():
    for m in range(4, 11):
        for n in (2, 4, 6, 8):
            if m % 2 == 0:
                block = label_block_even(m, n, base=0)
            else:
                block = label_block_odd(m, n, base=0)
            assert block[Vertex(1, 1)] == m * n - n // 2 + 2
            assert min(block.values()) == 0
            assert max(block.values()) == block[Vertex(1, 1)]
    for n in (2, 4, 6, 8):
        block = label_block_m3(n, base=0)
        assert max(block.values()) == 5 * n // 2 + 3


def test_block_is_internally_valid():
    # every pair inside a freshly labeled block meets the radio condition
    for m, n in ((5, 4), (4, 6), (3, 6), (7, 2), (6, 8)):
        book = StackedBook(m, n)
        if m == 3:
            block = label_block_m3(n, base=5)
        elif m % 2 == 0:
            block = label_block_even(m, n, base=5)
        else:
            block = label_block_odd(m, n, base=5)
        pairs = list(block.items())
        for i, (u, fu) in enumerate(pairs):
            for v, fv in pairs[i + 1:]:
                required = book.diameter + 1 - book.distance(u, v)
                assert abs(fu - fv) >= required, (m, n, u, v)


def test_scheme_structure():
    for m, n in ((5, 4), (7, 6), (9, 2)):
        seq = scheme_odd(m, n).sequence
        assert len(seq) == 2 * m
        assert seq[0] == ("high", 1) and seq[-1] == ("low", 1)
    for m, n in ((4, 4), (6, 6), (10, 2)):
        seq = scheme_even(m, n).sequence
        assert len(seq) == 2 * m
        assert seq[0] == ("high", 1) and seq[-1] == ("low", 1)
    assert len(scheme_m3(4).sequence) == 6


def test_label_graph_figure_values():
    lab = label_graph(StackedBook(4, 6))
    assert lab.span == 77
    assert [lab.labels[Vertex(1, j)] for j in range(1, 7)] == [23, 50, 77, 0, 27, 54]

    assert label_graph(StackedBook(3, 6)).span == 60
    assert label_graph(StackedBook(4, 2)).span == 9
    assert label_graph(StackedBook(10, 12)).span == 731


def test_label_graph_spans_match_formulas():
    for m in range(3, 11):
        for n in range(2, 13, 2):
            lab = label_graph(StackedBook(m, n))
            expected = upper_bound_m3(n) if m == 3 else exact_radio_number(m, n)
            assert lab.span == expected
            assert lab.f_min == 0


def test_label_graph_increment_structure():
    # sorted labels step only by q, p, or the chain gap between blocks
    for m, n in ((4, 6), (5, 8), (3, 6), (6, 4)):
        book = StackedBook(m, n)
        lab = label_graph(book)
        values = sorted(lab.labels.values())
        diffs = [b - a for a, b in zip(values, values[1:])]
        p, q = n // 2 + 1, n // 2
        # the gap between consecutive blocks is the chain step minus the block span
        block_span = 5 * n // 2 + 3 if m == 3 else m * n - n // 2 + 2
        chain_gap = chain_step(m, n) - block_span
        assert set(diffs) <= {p, q, chain_gap}
        assert diffs.count(chain_gap) >= n // 2 - 1


def test_label_graph_all_labels_distinct():
    lab = label_graph(StackedBook(6, 8))
    values = list(lab.labels.values())
    assert len(values) == len(set(values)) == 48


def test_labeling_type_invariants():
    with pytest.raises(ValueError):
        Labeling(StackedBook(3, 2), {})
    with pytest.raises(ValueError):
        Labeling(StackedBook(3, 2), {Vertex(1, 1): -1})
    with pytest.raises(ValueError):
        Labeling(StackedBook(3, 2), {Vertex(1, 1): 1.5})
    lab = Labeling(StackedBook(3, 2), {Vertex(1, 1): 4, Vertex(2, 1): 9})
    assert (lab.f_min, lab.f_max, lab.span) == (4, 9, 5)
    assert lab.shifted(10).span == 5


def test_base_validation():
    with pytest.raises(ValueError):
        label_block_even(4, 6, base=-1)
    with pytest.raises(ValueError):
        label_block_m3(6, base=0, block_index=9)


def test_label_graph_output_verifies():
    for m, n in ((4, 2), (5, 6), (3, 4), (8, 6)):
        book = StackedBook(m, n)
        report = verify(book, label_graph(book))
        assert report.valid
