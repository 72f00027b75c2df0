"""
Input corpora: seeded random acyclic quivers and exhaustive small ones.
"""

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from quiverflip.core.paths import is_acyclic
from quiverflip.core.quiver import Quiver
from quiverflip.exceptions import ResourceLimitError, UsageError

MAX_ENUMERATION_VERTICES = 5


@dataclass(frozen=True)
class GenSpec:
    """
    Parameters of one random acyclic quiver.

    Attributes:
        n: Vertex count
        edge_probability: Chance that a forward pair carries arrows
        max_multiplicity: Multiplicities are uniform in [1, max_multiplicity]
        seed: 64-bit unsigned seed
    """

    n: int
    edge_probability: float | Fraction = 0.4
    max_multiplicity: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.n < 0:
            raise UsageError(f"Vertex count must be non-negative, got {self.n}", self.n)
        if not 0 <= self.edge_probability <= 1:
            raise UsageError(f"Edge probability must lie in [0, 1], got {self.edge_probability}",
                             self.edge_probability)
        if self.max_multiplicity < 1:
            raise UsageError(f"Maximum multiplicity must be positive, got {self.max_multiplicity}",
                             self.max_multiplicity)
        if not 0 <= self.seed < 2 ** 64:
            raise UsageError(f"Seed must be a 64-bit unsigned integer, got {self.seed}", self.seed)


def random_acyclic(spec: GenSpec) -> Quiver:
    """
    Draw a random acyclic quiver.

    A uniformly random topological order is drawn first; each forward pair
    then carries arrows with probability ``edge_probability`` and a uniform
    multiplicity. Identical specs give identical quivers.
    """
    rng = np.random.default_rng(spec.seed)
    n = spec.n
    order = rng.permutation(n)
    present = rng.random((n, n)) < float(spec.edge_probability)
    multiplicities = rng.integers(1, spec.max_multiplicity + 1, size=(n, n))
    forward = np.triu(present, k=1) * multiplicities

    matrix = np.zeros((n, n), dtype=np.int64)
    matrix[np.ix_(order, order)] = forward - forward.T
    return Quiver(matrix)


def enumerate_labeled(n: int, max_mult: int) -> Iterator[Quiver]:
    """
    Every labeled acyclic quiver on exactly ``n`` vertices with entries in
    [−max_mult, max_mult], in lexicographic order of the upper triangle.

    Raises:
        ResourceLimitError: If ``n`` exceeds 5
    """
    if n > MAX_ENUMERATION_VERTICES:
        raise ResourceLimitError("Too many vertices for exhaustive enumeration", MAX_ENUMERATION_VERTICES, n)
    if max_mult < 0:
        raise UsageError(f"Maximum multiplicity must be non-negative, got {max_mult}", max_mult)

    pairs = list(itertools.combinations(range(n), 2))
    rows = [i for i, _ in pairs]
    cols = [j for _, j in pairs]
    for entries in itertools.product(range(-max_mult, max_mult + 1), repeat=len(pairs)):
        matrix = np.zeros((n, n), dtype=np.int64)
        if pairs:
            matrix[rows, cols] = entries
            matrix[cols, rows] = [-e for e in entries]
        q = Quiver(matrix)
        if is_acyclic(q):
            yield q


def enumerate_small(max_n: int, max_mult: int) -> Iterator[Quiver]:
    """
    Every labeled acyclic quiver with 1..max_n vertices, smallest first.

    The size guard runs at call time, before any quiver is produced.

    Raises:
        ResourceLimitError: If ``max_n`` exceeds 5
    """
    if max_n > MAX_ENUMERATION_VERTICES:
        raise ResourceLimitError("Too many vertices for exhaustive enumeration", MAX_ENUMERATION_VERTICES, max_n)
    return itertools.chain.from_iterable(enumerate_labeled(n, max_mult) for n in range(1, max_n + 1))
