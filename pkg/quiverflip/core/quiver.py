"""
Quivers as skew-symmetric exchange matrices.

A quiver without loops or 2-cycles on vertices 0..n-1 is stored as the integer
matrix b with b[i][j] = (arrows i→j) − (arrows j→i). Entries are Python ints
in an object array, so multiplicities are exact at any size. Opposite arrows
cancel on construction, so the representation is canonical and equality is
matrix equality.
"""

import operator
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Optional, Sequence, Union

import networkx as nx
import numpy as np

from quiverflip.exceptions import UsageError


class Provenance(str, Enum):
    """Where a vertex came from."""

    ORIGINAL = "original"
    INSERTED = "inserted"


@dataclass(frozen=True, order=True)
class VertexId:
    """A vertex of one quiver: its stable index and its display label."""

    index: int
    label: str

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Arrow:
    """All parallel arrows from ``tail`` to ``head``.

    ``multiplicity`` equals the exchange matrix entry b[tail][head].
    """

    tail: VertexId
    head: VertexId
    multiplicity: int = 1

    def __post_init__(self):
        if self.tail.index == self.head.index:
            raise UsageError(f"Arrow {self} is a loop", self)
        if self.multiplicity < 1:
            raise UsageError(f"Arrow multiplicity must be positive, got {self.multiplicity}", self)

    @property
    def pair(self) -> tuple[int, int]:
        return (self.tail.index, self.head.index)

    def __str__(self) -> str:
        suffix = f" (x{self.multiplicity})" if self.multiplicity > 1 else ""
        return f"{self.tail.label}→{self.head.label}{suffix}"


def zeros(n: int) -> np.ndarray:
    """An n×n exact-integer zero matrix."""
    return np.zeros((n, n), dtype=object)


def exact_matrix(matrix) -> np.ndarray:
    """
    Copy ``matrix`` into an object array of Python ints.

    Raises:
        UsageError: If an entry is not an integer
    """
    raw = np.array(matrix, dtype=object)
    if raw.size == 0:
        return np.empty((0, 0), dtype=object)
    try:
        return np.vectorize(operator.index, otypes=[object])(raw)
    except TypeError:
        raise UsageError("Exchange matrix entries must be integers") from None


VertexLike = Union[int, str, VertexId]
ArrowLike = Union[Arrow, tuple[VertexLike, VertexLike], tuple[VertexLike, VertexLike, int]]


@dataclass(frozen=True, eq=False)
class Quiver:
    """
    A finite quiver without loops or 2-cycles.

    Instances are immutable: the matrix is copied on construction and marked
    read-only, and every operation returns a new quiver.

    Attributes:
        matrix: n×n skew-symmetric exchange matrix of Python ints
        labels: display label per vertex, unique
        provenance: Original or Inserted per vertex

    Examples:
        >>> q = Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("1", "3"), ("3", "2")])
        >>> [str(a) for a in q.arrows()]
        ['1→2', '1→3', '3→2']
    """

    matrix: np.ndarray
    labels: Optional[tuple[str, ...]] = None
    provenance: Optional[tuple[Provenance, ...]] = field(default=None)

    def __post_init__(self):
        matrix = exact_matrix(self.matrix)
        if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
            raise UsageError(f"Exchange matrix must be square, got shape {matrix.shape}")
        if not np.array_equal(matrix, -matrix.T):
            raise UsageError("Exchange matrix must be skew-symmetric")
        matrix.flags.writeable = False
        n = matrix.shape[0]

        labels = tuple(str(i + 1) for i in range(n)) if self.labels is None else tuple(self.labels)
        if len(labels) != n:
            raise UsageError(f"Expected {n} labels, got {len(labels)}")
        if len(set(labels)) != n:
            raise UsageError("Vertex labels must be unique", labels)

        provenance = (
            (Provenance.ORIGINAL,) * n if self.provenance is None
            else tuple(Provenance(p) for p in self.provenance)
        )
        if len(provenance) != n:
            raise UsageError(f"Expected {n} provenance flags, got {len(provenance)}")

        object.__setattr__(self, "matrix", matrix)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "provenance", provenance)

    @classmethod
    def empty(cls, n: int) -> "Quiver":
        """The arrowless quiver on vertices labeled 1..n."""
        return cls(zeros(n))

    @classmethod
    def from_arrows(
        cls,
        labels: Sequence[str] | int,
        arrows: Iterable[tuple],
        provenance: Optional[Sequence[Provenance]] = None,
    ) -> "Quiver":
        """
        Build a quiver from arrow tuples.

        Args:
            labels: Vertex labels in index order, or a vertex count (labels 1..n)
            arrows: ``(tail, head)`` or ``(tail, head, multiplicity)`` tuples whose
                endpoints are labels or indices. Opposite arrows cancel.
            provenance: Optional per-vertex provenance

        Returns:
            The quiver
        """
        shell = cls.empty(labels) if isinstance(labels, int) else cls(
            zeros(len(labels)), tuple(labels)
        )
        matrix = zeros(shell.n)
        for spec in arrows:
            tail, head, *rest = spec
            multiplicity = rest[0] if rest else 1
            i, j = shell.resolve(tail), shell.resolve(head)
            if i == j:
                raise UsageError(f"Loop at vertex {shell.labels[i]}", spec)
            if multiplicity < 1:
                raise UsageError(f"Arrow multiplicity must be positive, got {multiplicity}", spec)
            matrix[i, j] += multiplicity
            matrix[j, i] -= multiplicity
        return cls(matrix, shell.labels, provenance)

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def vertices(self) -> tuple[VertexId, ...]:
        return tuple(VertexId(i, label) for i, label in enumerate(self.labels))

    def vertex(self, v: VertexLike) -> VertexId:
        i = self.resolve(v)
        return VertexId(i, self.labels[i])

    def resolve(self, v: VertexLike) -> int:
        """
        Turn an index, label or VertexId into a vertex index.

        Raises:
            UsageError: If the vertex does not exist in this quiver
        """
        if isinstance(v, VertexId):
            if not 0 <= v.index < self.n or self.labels[v.index] != v.label:
                raise UsageError(f"Unknown vertex {v!r}", v)
            return v.index
        if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
            if not 0 <= v < self.n:
                raise UsageError(f"Vertex index {v} out of range for {self.n} vertices", v)
            return int(v)
        if isinstance(v, str):
            try:
                return self.labels.index(v)
            except ValueError:
                raise UsageError(f"Unknown vertex label {v!r}", v) from None
        raise UsageError(f"Cannot interpret {v!r} as a vertex", v)

    def is_inserted(self, v: VertexLike) -> bool:
        return self.provenance[self.resolve(v)] is Provenance.INSERTED

    @property
    def original_vertices(self) -> tuple[VertexId, ...]:
        return tuple(v for v in self.vertices if self.provenance[v.index] is Provenance.ORIGINAL)

    def arrows(self) -> tuple[Arrow, ...]:
        """Every arrow bundle, ordered by (tail index, head index)."""
        tails, heads = np.nonzero(self.matrix > 0)
        vertices = self.vertices
        return tuple(
            Arrow(vertices[i], vertices[j], int(self.matrix[i, j]))
            for i, j in sorted(zip(tails.tolist(), heads.tolist()))
        )

    @property
    def total_multiplicity(self) -> int:
        """Number of arrows counted with multiplicity."""
        return int(self.matrix[self.matrix > 0].sum())

    def multiplicity(self, tail: VertexLike, head: VertexLike) -> int:
        """Number of arrows tail→head (0 if the arrows point the other way)."""
        return max(int(self.matrix[self.resolve(tail), self.resolve(head)]), 0)

    def support_graph(self) -> nx.DiGraph:
        """The simple digraph on vertex indices with an edge wherever b[i][j] > 0."""
        graph = nx.DiGraph()
        graph.add_nodes_from(range(self.n))
        tails, heads = np.nonzero(self.matrix > 0)
        graph.add_edges_from(zip(tails.tolist(), heads.tolist()))
        return graph

    def relabel(self, labels: Sequence[str]) -> "Quiver":
        return Quiver(self.matrix, tuple(labels), self.provenance)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Quiver):
            return NotImplemented
        return equal(self, other)

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.matrix.flat)))

    def __reduce__(self):
        return Quiver, (self.matrix, self.labels, self.provenance)

    def __repr__(self) -> str:
        arrows = ", ".join(str(a) for a in self.arrows())
        return f"Quiver(n={self.n}, arrows=[{arrows}])"


def equal(q1: Quiver, q2: Quiver) -> bool:
    """True iff both quivers have the same vertex count and exchange matrix.

    Labels and provenance are ignored.
    """
    return q1.n == q2.n and np.array_equal(q1.matrix, q2.matrix)


def restrict(q: Quiver, vertices: Iterable[VertexLike]) -> Quiver:
    """
    The full subquiver on a vertex subset.

    Vertices keep their relative index order, labels and provenance.

    Raises:
        UsageError: If a vertex is not in ``q``
    """
    keep = sorted({q.resolve(v) for v in vertices})
    return Quiver(
        q.matrix[np.ix_(keep, keep)],
        tuple(q.labels[i] for i in keep),
        tuple(q.provenance[i] for i in keep),
    )


def fresh_label(q: Quiver) -> str:
    """Label for the next inserted vertex: ``v<k>`` with k = n + 1, bumped past taken labels."""
    taken = set(q.labels)
    k = q.n + 1
    while f"v{k}" in taken:
        k += 1
    return f"v{k}"


def add_vertex(q: Quiver, label: Optional[str] = None,
               provenance: Provenance = Provenance.INSERTED) -> tuple[Quiver, VertexId]:
    """Extend ``q`` by one isolated vertex."""
    label = fresh_label(q) if label is None else label
    if label in q.labels:
        raise UsageError(f"Vertex label {label!r} already exists", label)
    matrix = zeros(q.n + 1)
    matrix[:q.n, :q.n] = q.matrix
    extended = Quiver(matrix, q.labels + (label,), q.provenance + (provenance,))
    return extended, VertexId(q.n, label)


def insert_framed_vertex(q: Quiver, a: ArrowLike, label: Optional[str] = None) -> tuple[Quiver, VertexId]:
    """
    Add a vertex v with single arrows head(a)→v and v→tail(a).

    All other matrix entries, including the arrows of ``a`` itself, are left
    unchanged; mutating at v afterwards is what removes one copy of ``a``.

    Args:
        q: The quiver
        a: An Arrow or a (tail, head) pair with b[tail][head] > 0
        label: Label for the new vertex; defaults to :func:`fresh_label`

    Returns:
        The extended quiver and the new vertex

    Raises:
        UsageError: If the arrow is absent from ``q``
    """
    if isinstance(a, Arrow):
        tail, head = q.resolve(a.tail), q.resolve(a.head)
    else:
        tail, head = q.resolve(a[0]), q.resolve(a[1])
    if q.matrix[tail, head] <= 0:
        raise UsageError(f"No arrow {q.labels[tail]}→{q.labels[head]} in quiver", a)

    extended, v = add_vertex(q, label)
    matrix = extended.matrix.copy()
    matrix[head, v.index], matrix[v.index, head] = 1, -1
    matrix[v.index, tail], matrix[tail, v.index] = 1, -1
    return Quiver(matrix, extended.labels, extended.provenance), v
