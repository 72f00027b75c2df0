"""
Tests for random and exhaustive quiver generation.
"""

from fractions import Fraction

import numpy as np
import pytest

from quiverflip.core.paths import is_acyclic
from quiverflip.exceptions import ResourceLimitError, UsageError
from quiverflip.generate import GenSpec, enumerate_labeled, enumerate_small, random_acyclic


class TestGenSpec:
    """Tests for GenSpec validation."""

    @pytest.mark.parametrize("kwargs", [
        {"n": -1},
        {"n": 3, "edge_probability": 1.5},
        {"n": 3, "max_multiplicity": 0},
        {"n": 3, "seed": 2 ** 64},
        {"n": 3, "seed": -1},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(UsageError):
            GenSpec(**kwargs)

    def test_fraction_probability(self):
        assert GenSpec(3, Fraction(1, 2)).edge_probability == Fraction(1, 2)


class TestRandomAcyclic:
    """Tests for random_acyclic."""

    def test_deterministic(self):
        spec = GenSpec(8, 0.4, 3, seed=12345)
        assert np.array_equal(random_acyclic(spec).matrix, random_acyclic(spec).matrix)

    def test_seeds_differ(self):
        quivers = {random_acyclic(GenSpec(8, 0.5, 1, seed)) for seed in range(20)}
        assert len(quivers) > 1

    def test_acyclic_and_bounded(self):
        for seed in range(50):
            q = random_acyclic(GenSpec(10, 0.4, 3, seed))
            assert is_acyclic(q)
            assert np.abs(q.matrix).max(initial=0) <= 3

    def test_extreme_probabilities(self):
        assert random_acyclic(GenSpec(6, 0.0, 2, 1)).total_multiplicity == 0
        complete = random_acyclic(GenSpec(6, 1.0, 1, 1))
        assert complete.total_multiplicity == 15
        assert is_acyclic(complete)

    def test_empty(self):
        assert random_acyclic(GenSpec(0)).n == 0


class TestEnumeration:
    """Tests for exhaustive enumeration."""

    @pytest.mark.parametrize("n, max_mult, count", [
        (1, 1, 1),
        (2, 1, 3),
        (3, 1, 25),
        (2, 2, 5),
    ])
    def test_labeled_counts(self, n, max_mult, count):
        """Test the number of labeled acyclic quivers."""
        assert sum(1 for _ in enumerate_labeled(n, max_mult)) == count

    def test_small_covers_all_sizes(self):
        sizes = [q.n for q in enumerate_small(3, 1)]
        assert sizes == [1] + [2] * 3 + [3] * 25

    def test_no_arrows(self):
        assert [q.total_multiplicity for q in enumerate_labeled(3, 0)] == [0]

    def test_size_guard(self):
        with pytest.raises(ResourceLimitError):
            enumerate_small(6, 1)
        with pytest.raises(ResourceLimitError):
            next(enumerate_labeled(6, 1))
