"""
Pytest configuration and fixtures for testing the quiverflip library.
"""

import sys
from pathlib import Path

import pytest

# Add the parent directory to the Python path to import quiverflip
sys.path.insert(0, str(Path(__file__).parent.parent))

from quiverflip.config import Settings
from quiverflip.core.quiver import Quiver
from quiverflip.formats.documents import dump_quiver


#
# Quiver Fixtures
#

@pytest.fixture
def triangle_quiver():
    """Return the acyclic triangle 1→2, 1→3, 3→2 (ℓ = 2, arrow 1→2 too short)."""
    return Quiver.from_arrows(["1", "2", "3"], [("1", "2"), ("1", "3"), ("3", "2")])


@pytest.fixture
def path_quiver():
    """Return the linearly oriented path 1→2→3→4 (already graded, ℓ = 3)."""
    return Quiver.from_arrows(4, [(0, 1), (1, 2), (2, 3)])


@pytest.fixture
def kronecker_quiver():
    """Return the Kronecker quiver: two arrows 1→2."""
    return Quiver.from_arrows(2, [(0, 1, 2)])


@pytest.fixture
def three_cycle():
    """Return the oriented 3-cycle 1→2→3→1."""
    return Quiver.from_arrows(3, [(0, 1), (1, 2), (2, 0)])


@pytest.fixture
def weighted_quiver():
    """Return an acyclic quiver with multiplicities and a short arrow 1→4."""
    return Quiver.from_arrows(
        ["1", "2", "3", "4", "5"],
        [("1", "2", 2), ("2", "3"), ("3", "4", 3), ("1", "4"), ("5", "3")],
    )


#
# Settings Fixtures
#

@pytest.fixture
def settings():
    """Return default settings, independent of the test environment."""
    return Settings()


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    """Remove quiverflip variables so tests see the documented defaults."""
    for key in ("QUIVERFLIP_STEP1_CAP_FACTOR", "QUIVERFLIP_STEP1_MAX_ITERATIONS", "QUIVERFLIP_LOG_LEVEL"):
        monkeypatch.delenv(key, raising=False)


#
# File Fixtures
#

@pytest.fixture
def triangle_file(tmp_path, triangle_quiver):
    """Write the triangle quiver document and return its path."""
    path = tmp_path / "triangle.json"
    path.write_text(dump_quiver(triangle_quiver), encoding="utf-8")
    return path


@pytest.fixture
def cycle_file(tmp_path, three_cycle):
    """Write the 3-cycle document and return its path."""
    path = tmp_path / "cycle.json"
    path.write_text(dump_quiver(three_cycle), encoding="utf-8")
    return path
