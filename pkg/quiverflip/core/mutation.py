"""
Quiver mutation on exchange matrices.
"""

from typing import Iterable

import numpy as np

from quiverflip.core.quiver import Quiver, VertexLike


def mutate(q: Quiver, k: VertexLike) -> Quiver:
    """
    Mutate ``q`` at vertex ``k``.

    b'[i][j] = −b[i][j] if k ∈ {i, j}, otherwise
    b'[i][j] = b[i][j] + sign(b[i][k])·max(b[i][k]·b[k][j], 0).

    Args:
        q: The quiver (unchanged)
        k: Index, label or VertexId of the mutation vertex

    Returns:
        The mutated quiver on the same vertices

    Raises:
        UsageError: If ``k`` is not a vertex of ``q``
    """
    k = q.resolve(k)
    b = q.matrix
    column, row = b[:, k], b[k, :]
    products = np.outer(column, row)
    composite = np.where(column > 0, 1, -1)[:, None] * np.where(products > 0, products, 0)
    mutated = b + composite
    mutated[k, :] = -row
    mutated[:, k] = -column
    return Quiver(mutated, q.labels, q.provenance)


def mutate_sequence(q: Quiver, vertices: Iterable[VertexLike]) -> Quiver:
    """Mutate at each vertex in turn."""
    for k in vertices:
        q = mutate(q, k)
    return q
