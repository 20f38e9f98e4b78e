"""Path-based hierarchical drawings of directed acyclic graphs."""

from ._core import (
    PathlayoutError,
    csv_header,
    generate,
    greedy_path_cover,
    layout,
    layout_edge_list,
    longest_path_layering,
    min_path_cover,
    topological_sort,
)

__all__ = [
    "PathlayoutError",
    "csv_header",
    "generate",
    "greedy_path_cover",
    "layout",
    "layout_edge_list",
    "longest_path_layering",
    "min_path_cover",
    "topological_sort",
]
