"""
Tests for environment configuration.
"""

import pytest

from quiverflip.config import Settings, load_settings
from quiverflip.schema import SchemaError


class TestLoadSettings:
    """Tests for load_settings."""

    def test_defaults(self):
        assert load_settings({}) == Settings(step1_cap_factor=10, step1_max_iterations=None, log_level="WARNING")

    def test_values(self):
        settings = load_settings({
            "QUIVERFLIP_STEP1_CAP_FACTOR": "4",
            "QUIVERFLIP_STEP1_MAX_ITERATIONS": "0",
            "QUIVERFLIP_LOG_LEVEL": "debug",
        })
        assert settings == Settings(step1_cap_factor=4, step1_max_iterations=0, log_level="DEBUG")

    def test_empty_values_are_unset(self):
        assert load_settings({"QUIVERFLIP_STEP1_CAP_FACTOR": " ", "QUIVERFLIP_LOG_LEVEL": ""}) == Settings()

    def test_reads_os_environ(self, monkeypatch):
        monkeypatch.setenv("QUIVERFLIP_STEP1_CAP_FACTOR", "3")
        assert load_settings().step1_cap_factor == 3

    @pytest.mark.parametrize("key, value", [
        ("QUIVERFLIP_STEP1_CAP_FACTOR", "0"),
        ("QUIVERFLIP_STEP1_CAP_FACTOR", "ten"),
        ("QUIVERFLIP_STEP1_MAX_ITERATIONS", "-2"),
        ("QUIVERFLIP_LOG_LEVEL", "loud"),
    ])
    def test_invalid_values(self, key, value):
        with pytest.raises(SchemaError) as exc_info:
            load_settings({key: value})
        assert list(exc_info.value.errors) == [key]


class TestSettings:
    """Tests for the Step 1 cap."""

    def test_cap_from_factor(self):
        assert Settings().step1_cap(ell=3, total_multiplicity=5) == 150
        assert Settings(step1_cap_factor=2).step1_cap(ell=3, total_multiplicity=5) == 30

    def test_absolute_cap_wins(self):
        assert Settings(step1_max_iterations=7).step1_cap(ell=3, total_multiplicity=5) == 7
