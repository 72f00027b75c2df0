"""
Tests for the base Validator class and SchemaError.
"""

import pytest

from quiverflip.schema.base import SchemaError, Validator


class LabelValidator(Validator):
    def _validate(self, data, path):
        if not isinstance(data, str):
            raise SchemaError("Value must be a string", path)
        return data


class TestValidator:
    """Tests for the base Validator class."""

    def test_validate_method(self):
        """Test the validate method."""
        validator = LabelValidator()

        # Valid data
        assert validator.validate("v4") == "v4"

        # Invalid data
        with pytest.raises(SchemaError) as exc_info:
            validator.validate(123)
        assert "Value must be a string" in str(exc_info.value)

    def test_required_by_default(self):
        """Test that None is rejected unless the validator is optional."""
        with pytest.raises(SchemaError) as exc_info:
            LabelValidator().validate(None)
        assert "Value is required" in str(exc_info.value)

    def test_optional(self):
        """Test optional validation."""
        validator = LabelValidator().optional()

        # None should pass
        assert validator.validate(None) is None

        # Normal validation still applies to non-None values
        assert validator.validate("1") == "1"
        with pytest.raises(SchemaError):
            validator.validate(1)

    def test_default(self):
        """Test default values, plain and callable."""
        assert LabelValidator().default("1").validate(None) == "1"

        calls = []

        def make_default():
            calls.append(True)
            return "fresh"

        validator = LabelValidator().default(make_default)
        assert validator.validate(None) == "fresh"
        assert validator.validate(None) == "fresh"
        assert len(calls) == 2

    def test_chaining_clones(self):
        """Test that chaining returns a new validator and leaves the original alone."""
        base = LabelValidator()
        optional = base.optional()

        assert optional is not base
        assert optional.validate(None) is None
        with pytest.raises(SchemaError):
            base.validate(None)

    def test_path_prefix(self):
        """Test that the path prefix appears in the error."""
        with pytest.raises(SchemaError) as exc_info:
            LabelValidator().validate(5, ["arrows", 3, "to"])
        assert exc_info.value.path == ["arrows", 3, "to"]
        assert "arrows → [3] → to" in str(exc_info.value)


class TestSchemaError:
    """Tests for SchemaError formatting and collection."""

    def test_base_field(self):
        """Test that an error without a path is filed under _base."""
        error = SchemaError("Broken")
        assert error.errors == {"_base": "Broken"}
        assert str(error) == "_base: Broken"

    def test_add_error_updates_message(self):
        """Test that added errors appear in str()."""
        error = SchemaError()
        assert str(error) == "Document does not match its schema"

        error.add_error("arrows → [0]", "Loop at vertex '1'")
        error.add_error("arrows → [2]", "Arrow 1→2 repeated")
        assert str(error) == "arrows → [0]: Loop at vertex '1'\narrows → [2]: Arrow 1→2 repeated"
        assert list(error.errors) == ["arrows → [0]", "arrows → [2]"]

    def test_is_value_error(self):
        """Test that SchemaError can be caught as ValueError."""
        with pytest.raises(ValueError):
            raise SchemaError("Broken")
