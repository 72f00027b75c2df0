"""
Tests for the Quiver type and vertex insertion.
"""

import numpy as np
import pytest

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
from quiverflip.exceptions import UsageError


class TestQuiverConstruction:
    """Tests for building quivers."""

    def test_from_arrows_by_label(self, triangle_quiver):
        """Test building from labeled arrow tuples."""
        assert triangle_quiver.n == 3
        assert triangle_quiver.labels == ("1", "2", "3")
        assert [str(a) for a in triangle_quiver.arrows()] == ["1→2", "1→3", "3→2"]

    def test_from_arrows_by_index(self, kronecker_quiver):
        """Test integer vertex counts and index endpoints."""
        assert kronecker_quiver.labels == ("1", "2")
        assert kronecker_quiver.matrix.tolist() == [[0, 2], [-2, 0]]
        assert str(kronecker_quiver.arrows()[0]) == "1→2 (x2)"

    def test_opposite_arrows_cancel(self):
        """Test that 2-cycles cancel on construction."""
        q = Quiver.from_arrows(2, [(0, 1, 3), (1, 0)])
        assert q.multiplicity(0, 1) == 2
        assert q.multiplicity(1, 0) == 0
        assert q.total_multiplicity == 2

    def test_loops_rejected(self):
        """Test that loops cannot be built."""
        with pytest.raises(UsageError):
            Quiver.from_arrows(2, [(0, 0)])

    def test_matrix_must_be_skew_symmetric(self):
        """Test validation of the exchange matrix."""
        with pytest.raises(UsageError) as exc_info:
            Quiver(np.array([[0, 1], [1, 0]]))
        assert "skew-symmetric" in str(exc_info.value)

        with pytest.raises(UsageError):
            Quiver(np.zeros((2, 3)))

    def test_labels_checked(self):
        """Test label count and uniqueness."""
        with pytest.raises(UsageError):
            Quiver(np.zeros((2, 2)), ("a",))
        with pytest.raises(UsageError):
            Quiver(np.zeros((2, 2)), ("a", "a"))

    def test_matrix_is_read_only_copy(self):
        """Test that the stored matrix is an immutable copy."""
        source = np.array([[0, 1], [-1, 0]])
        q = Quiver(source)
        source[0, 1] = 5

        assert q.matrix[0, 1] == 1
        with pytest.raises(ValueError):
            q.matrix[0, 1] = 2

    def test_empty(self):
        """Test arrowless and vertexless quivers."""
        assert Quiver.empty(3).total_multiplicity == 0
        assert Quiver.empty(0).n == 0
        assert Quiver(np.zeros((0,))).n == 0


class TestVertices:
    """Tests for vertex lookup and provenance."""

    def test_resolve(self, triangle_quiver):
        """Test resolving indices, labels and VertexIds."""
        assert triangle_quiver.resolve(2) == 2
        assert triangle_quiver.resolve("3") == 2
        assert triangle_quiver.resolve(VertexId(2, "3")) == 2
        assert triangle_quiver.vertex("2") == VertexId(1, "2")

    @pytest.mark.parametrize("vertex", [3, -1, "9", VertexId(0, "2"), True, 1.5])
    def test_resolve_unknown(self, triangle_quiver, vertex):
        """Test that unknown vertices raise UsageError."""
        with pytest.raises(UsageError):
            triangle_quiver.resolve(vertex)

    def test_provenance_defaults_to_original(self, triangle_quiver):
        """Test default provenance."""
        assert triangle_quiver.provenance == (Provenance.ORIGINAL,) * 3
        assert triangle_quiver.original_vertices == triangle_quiver.vertices

    def test_vertex_ids_order_by_index(self):
        """Test VertexId ordering and display."""
        assert sorted([VertexId(2, "a"), VertexId(0, "z")])[0] == VertexId(0, "z")
        assert str(VertexId(3, "v4")) == "v4"


class TestArrows:
    """Tests for arrow listing and the Arrow type."""

    def test_arrows_sorted_by_indices(self, weighted_quiver):
        """Test arrow order and multiplicities."""
        assert [(a.pair, a.multiplicity) for a in weighted_quiver.arrows()] == [
            ((0, 1), 2), ((0, 3), 1), ((1, 2), 1), ((2, 3), 3), ((4, 2), 1),
        ]
        assert weighted_quiver.total_multiplicity == 8

    def test_arrow_validation(self):
        """Test that loops and non-positive multiplicities are refused."""
        with pytest.raises(UsageError):
            Arrow(VertexId(0, "1"), VertexId(0, "1"))
        with pytest.raises(UsageError):
            Arrow(VertexId(0, "1"), VertexId(1, "2"), 0)

    def test_support_graph(self, weighted_quiver):
        """Test the simple support digraph."""
        graph = weighted_quiver.support_graph()
        assert sorted(graph.nodes) == [0, 1, 2, 3, 4]
        assert sorted(graph.edges) == [(0, 1), (0, 3), (1, 2), (2, 3), (4, 2)]


class TestEquality:
    """Tests for quiver equality."""

    def test_labels_ignored(self, triangle_quiver):
        """Test that equality compares exchange matrices only."""
        relabeled = triangle_quiver.relabel(["a", "b", "c"])
        assert equal(triangle_quiver, relabeled)
        assert triangle_quiver == relabeled
        assert hash(triangle_quiver) == hash(relabeled)

    def test_different_matrices(self, triangle_quiver, path_quiver):
        """Test inequality on different sizes and entries."""
        assert triangle_quiver != path_quiver
        assert Quiver.from_arrows(2, [(0, 1)]) != Quiver.from_arrows(2, [(1, 0)])


class TestRestrict:
    """Tests for full subquivers."""

    def test_restrict_keeps_order_and_labels(self, weighted_quiver):
        """Test restriction to a vertex subset."""
        sub = restrict(weighted_quiver, ["4", "1", "3"])
        assert sub.labels == ("1", "3", "4")
        assert [str(a) for a in sub.arrows()] == ["1→4", "3→4 (x3)"]

    def test_restrict_unknown_vertex(self, weighted_quiver):
        """Test that unknown vertices raise UsageError."""
        with pytest.raises(UsageError):
            restrict(weighted_quiver, ["1", "6"])


class TestInsertion:
    """Tests for fresh labels and framed vertex insertion."""

    def test_fresh_label(self, triangle_quiver):
        """Test labels v<n+1>, bumped past taken labels."""
        assert fresh_label(triangle_quiver) == "v4"
        crowded = triangle_quiver.relabel(["v4", "v5", "x"])
        assert fresh_label(crowded) == "v6"

    def test_add_vertex(self, triangle_quiver):
        """Test adding an isolated inserted vertex."""
        extended, v = add_vertex(triangle_quiver)
        assert v == VertexId(3, "v4")
        assert extended.is_inserted(v)
        assert restrict(extended, range(3)) == triangle_quiver
        assert not extended.matrix[3].any()

        with pytest.raises(UsageError):
            add_vertex(triangle_quiver, "2")

    def test_insert_framed_vertex(self, triangle_quiver):
        """Test the framing arrows h(α)→v→t(α)."""
        framed, v = insert_framed_vertex(triangle_quiver, ("1", "2"))

        assert v == VertexId(3, "v4")
        assert framed.provenance[3] is Provenance.INSERTED
        assert [str(a) for a in framed.arrows()] == ["1→2", "1→3", "2→v4", "3→2", "v4→1"]
        assert restrict(framed, range(3)) == triangle_quiver

    def test_insert_framed_vertex_keeps_multiplicity(self, kronecker_quiver):
        """Test that framing arrows are single even on a multiple arrow."""
        framed, v = insert_framed_vertex(kronecker_quiver, kronecker_quiver.arrows()[0], label="w")
        assert v.label == "w"
        assert framed.multiplicity(0, 1) == 2
        assert framed.multiplicity(1, 2) == 1
        assert framed.multiplicity(2, 0) == 1

    def test_insert_on_missing_arrow(self, triangle_quiver):
        """Test that only existing arrows can be framed."""
        with pytest.raises(UsageError) as exc_info:
            insert_framed_vertex(triangle_quiver, ("2", "1"))
        assert "No arrow 2→1" in str(exc_info.value)
