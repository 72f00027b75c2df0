"""
Brute-force reference implementations for differential testing.

Nothing here shares code with the matrix implementation: quivers are
multisets of arrows, mutation is done arrow by arrow and paths are enumerated
one by one.
"""

from collections import Counter
from dataclasses import dataclass

import numpy as np

from quiverflip.core.paths import PathProfile, is_acyclic
from quiverflip.core.quiver import Quiver
from quiverflip.exceptions import CyclicQuiverError, ResourceLimitError

MAX_PATH_ENUMERATION_VERTICES = 12


@dataclass(frozen=True)
class ArrowQuiver:
    """A quiver as a vertex count and a sorted list of single arrows (tail, head)."""

    n: int
    arrows: tuple[tuple[int, int], ...]

    @classmethod
    def from_quiver(cls, q: Quiver) -> "ArrowQuiver":
        arrows = []
        for arrow in q.arrows():
            arrows.extend([arrow.pair] * arrow.multiplicity)
        return cls(q.n, tuple(sorted(arrows)))

    def to_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.n, self.n), dtype=np.int64)
        for tail, head in self.arrows:
            matrix[tail, head] += 1
            matrix[head, tail] -= 1
        return matrix


def oracle_mutate(q: ArrowQuiver, k: int) -> ArrowQuiver:
    """
    Mutate arrow by arrow.

    For every path i→k→j add an arrow i→j, reverse every arrow at k, then
    cancel opposite arrows pairwise as long as possible.
    """
    incoming = [tail for tail, head in q.arrows if head == k]
    outgoing = [head for tail, head in q.arrows if tail == k]

    arrows = Counter()
    for tail, head in q.arrows:
        if k in (tail, head):
            arrows[(head, tail)] += 1
        else:
            arrows[(tail, head)] += 1
    for i in incoming:
        for j in outgoing:
            arrows[(i, j)] += 1

    result = []
    for (tail, head), count in arrows.items():
        surplus = count - arrows.get((head, tail), 0)
        result.extend([(tail, head)] * max(surplus, 0))
    return ArrowQuiver(q.n, tuple(sorted(result)))


def enumerate_paths(q: Quiver) -> list[tuple[int, ...]]:
    """
    Every oriented path with at least one arrow, as vertex index tuples.

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
        ResourceLimitError: If ``q`` has more than 12 vertices
    """
    if q.n > MAX_PATH_ENUMERATION_VERTICES:
        raise ResourceLimitError("Too many vertices for path enumeration", MAX_PATH_ENUMERATION_VERTICES, q.n)
    if not is_acyclic(q):
        raise CyclicQuiverError()

    successors = {i: [j for j in range(q.n) if q.matrix[i, j] > 0] for i in range(q.n)}
    paths: list[tuple[int, ...]] = []

    def extend(path: tuple[int, ...]) -> None:
        for j in successors[path[-1]]:
            longer = path + (j,)
            paths.append(longer)
            extend(longer)

    for start in range(q.n):
        extend((start,))
    return paths


def brute_force_profile(q: Quiver) -> PathProfile:
    """PathProfile computed from :func:`enumerate_paths`."""
    paths = enumerate_paths(q)
    has_in = {path[-1] for path in paths}
    has_out = {path[0] for path in paths}
    ell = max((len(path) - 1 for path in paths), default=0)
    maximal = {
        len(path) - 1 for path in paths
        if path[0] not in has_in and path[-1] not in has_out
    }
    on_max_path = {
        (path[i], path[i + 1])
        for path in paths if len(path) - 1 == ell
        for i in range(len(path) - 1)
    }
    return PathProfile(ell, frozenset(maximal), frozenset(on_max_path))
