"""
Quivers, mutation and path queries.
"""

from quiverflip.core.quiver import (
    Arrow,
    Provenance,
    Quiver,
    VertexId,
    add_vertex,
    equal,
    fresh_label,
    insert_framed_vertex,
    restrict,
)
from quiverflip.core.mutation import mutate, mutate_sequence
from quiverflip.core.paths import (
    PathProfile,
    arrows_on_paths_of_length,
    is_acyclic,
    is_bipartite,
    longest_path_length,
    path_profile,
    sinks,
    sources,
)

__all__ = [
    "Arrow",
    "Provenance",
    "Quiver",
    "VertexId",
    "PathProfile",
    "add_vertex",
    "arrows_on_paths_of_length",
    "equal",
    "fresh_label",
    "insert_framed_vertex",
    "is_acyclic",
    "is_bipartite",
    "longest_path_length",
    "mutate",
    "mutate_sequence",
    "path_profile",
    "restrict",
    "sinks",
    "sources",
]
