"""Radio labelings of stacked-book graphs S_m x P_n.

Construction of provably valid labelings, closed-form bounds, a
radio-condition verifier, and an exact branch-and-bound solver for small
instances, plus a CLI tying them together.
"""

from .bounds import (
    BoundReport,
    block_lower_bound,
    block_plus_lower_bound,
    bound_report,
    exact_radio_number,
    lower_bound,
    path_radio_number,
    star_span_lower_bound,
    upper_bound_m3,
)
from .figures import FIGURE_IDS, figure_labeling
from .graphs import Block, GeneralGraph, StackedBook, Vertex, build_product_graph, path_graph
from .labeling import (
    BlockScheme,
    Labeling,
    chain_step,
    label_block_even,
    label_block_m3,
    label_block_odd,
    label_graph,
)
from .solver import SearchConfig, SearchResult, SymmetryInfo, solve_exact, solve_stacked_book
from .verify import VerificationReport, Violation, per_star_spread, verify

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockScheme",
    "BoundReport",
    "FIGURE_IDS",
    "GeneralGraph",
    "Labeling",
    "SearchConfig",
    "SearchResult",
    "StackedBook",
    "SymmetryInfo",
    "VerificationReport",
    "Vertex",
    "Violation",
    "block_lower_bound",
    "block_plus_lower_bound",
    "bound_report",
    "build_product_graph",
    "chain_step",
    "exact_radio_number",
    "figure_labeling",
    "label_block_even",
    "label_block_m3",
    "label_block_odd",
    "label_graph",
    "lower_bound",
    "path_graph",
    "path_radio_number",
    "per_star_spread",
    "solve_exact",
    "solve_stacked_book",
    "star_span_lower_bound",
    "upper_bound_m3",
    "verify",
]
