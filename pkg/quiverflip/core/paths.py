"""
Structural and oriented-path queries.

Paths are vertex sequences along positive matrix entries; their length is the
number of arrows. Parallel arrows do not multiply paths. Every query here
depends only on the support digraph of the quiver.
"""

from dataclasses import dataclass

import networkx as nx
import numpy as np

from quiverflip.core.quiver import Quiver, VertexId
from quiverflip.exceptions import CyclicQuiverError


@dataclass(frozen=True)
class PathProfile:
    """
    Longest-path summary of an acyclic quiver.

    Attributes:
        ell: Length of the longest oriented path (0 without arrows)
        maximal_lengths: Lengths of the maximal (non-extendable) paths with
            at least one arrow
        on_max_path: (tail, head) index pairs of arrows lying on a path of
            length ``ell``
    """

    ell: int
    maximal_lengths: frozenset[int]
    on_max_path: frozenset[tuple[int, int]]


def is_acyclic(q: Quiver) -> bool:
    """True iff the quiver has no oriented cycle."""
    return nx.is_directed_acyclic_graph(q.support_graph())


def _topological_order(q: Quiver) -> tuple[nx.DiGraph, list[int]]:
    graph = q.support_graph()
    try:
        return graph, list(nx.topological_sort(graph))
    except nx.NetworkXUnfeasible:
        cycle = [tail for tail, _ in nx.find_cycle(graph)]
        raise CyclicQuiverError("Path lengths are unbounded on a quiver with an oriented cycle", cycle) from None


def _depth_and_height(graph: nx.DiGraph, order: list[int]) -> tuple[dict[int, int], dict[int, int]]:
    """Longest path ending at / starting from each vertex."""
    depth = {v: 0 for v in order}
    for v in order:
        for w in graph.successors(v):
            depth[w] = max(depth[w], depth[v] + 1)
    height = {v: 0 for v in order}
    for v in reversed(order):
        for w in graph.successors(v):
            height[v] = max(height[v], height[w] + 1)
    return depth, height


def arrows_on_paths_of_length(q: Quiver, length: int) -> frozenset[tuple[int, int]]:
    """
    Arrows lying on some oriented path of exactly ``length`` arrows.

    Only meaningful for ``length`` at least the longest path length of ``q``,
    which is how the construction uses it: an arrow is on such a path iff the
    longest path through it has ``length`` arrows.

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
    """
    graph, order = _topological_order(q)
    depth, height = _depth_and_height(graph, order)
    return frozenset(
        (tail, head) for tail, head in graph.edges
        if depth[tail] + 1 + height[head] == length
    )


def longest_path_length(q: Quiver) -> int:
    """ℓ of ``q``: the maximum oriented path length."""
    graph, order = _topological_order(q)
    return max(_depth_and_height(graph, order)[0].values(), default=0)


def path_profile(q: Quiver) -> PathProfile:
    """
    Compute ℓ, the maximal path lengths and the arrows on length-ℓ paths.

    Uses dynamic programming over a topological order; the set of maximal
    path lengths is propagated from sinks backwards.

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
    """
    graph, order = _topological_order(q)
    depth, height = _depth_and_height(graph, order)
    ell = max(depth.values(), default=0)

    lengths_to_sink: dict[int, frozenset[int]] = {}
    for v in reversed(order):
        successors = list(graph.successors(v))
        if not successors:
            lengths_to_sink[v] = frozenset({0})
        else:
            lengths_to_sink[v] = frozenset(
                length + 1 for w in successors for length in lengths_to_sink[w]
            )

    maximal_lengths = frozenset(
        length
        for v in order
        if graph.in_degree(v) == 0 and graph.out_degree(v) > 0
        for length in lengths_to_sink[v]
    )
    on_max_path = frozenset(
        (tail, head) for tail, head in graph.edges
        if depth[tail] + 1 + height[head] == ell
    ) if ell > 0 else frozenset()
    return PathProfile(ell, maximal_lengths, on_max_path)


def _degrees(q: Quiver) -> tuple[np.ndarray, np.ndarray]:
    positive = q.matrix > 0
    return positive.sum(axis=0), positive.sum(axis=1)


def sources(q: Quiver) -> frozenset[VertexId]:
    """Vertices with no incoming and at least one outgoing arrow."""
    indegree, outdegree = _degrees(q)
    return frozenset(v for v in q.vertices if indegree[v.index] == 0 and outdegree[v.index] > 0)


def sinks(q: Quiver) -> frozenset[VertexId]:
    """Vertices with no outgoing and at least one incoming arrow."""
    indegree, outdegree = _degrees(q)
    return frozenset(v for v in q.vertices if outdegree[v.index] == 0 and indegree[v.index] > 0)


def is_bipartite(q: Quiver) -> bool:
    """True iff no vertex has both an incoming and an outgoing arrow."""
    indegree, outdegree = _degrees(q)
    return not np.any((indegree > 0) & (outdegree > 0))
