"""Boundaries of disk-like self-affine tiles with consecutive collinear digit sets."""

from ._tilelab import (
    TilelabError,
    appendix_neighbor_graph,
    boundary_points,
    char_poly,
    classify,
    contact_matrix,
    dimension,
    eval_digits,
    graph_text,
    is_disk_like,
    is_expanding,
    neighbor_graph,
    origin_on_boundary,
    represent,
    sign_path,
    spectral_radius,
    tile_points,
    verify,
)

__all__ = [
    "TilelabError",
    "appendix_neighbor_graph",
    "boundary_points",
    "char_poly",
    "classify",
    "contact_matrix",
    "dimension",
    "eval_digits",
    "graph_text",
    "is_disk_like",
    "is_expanding",
    "neighbor_graph",
    "origin_on_boundary",
    "represent",
    "sign_path",
    "spectral_radius",
    "tile_points",
    "verify",
]
