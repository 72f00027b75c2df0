"""
Tests for collection validators: List, Record, TaggedUnion.
"""

import pytest

from quiverflip.schema import Integer, List, Record, SchemaError, String, TaggedUnion


class TestListValidator:
    """Tests for the List validator."""

    def test_basic_validation(self):
        """Test lists with and without an item validator."""
        assert List().validate([1, "a", None]) == [1, "a", None]
        assert List(String()).validate(("1", "2")) == ["1", "2"]

        with pytest.raises(SchemaError):
            List().validate("12")

    def test_item_errors_carry_index(self):
        """Test that item errors point at the offending index."""
        with pytest.raises(SchemaError) as exc_info:
            List(String()).validate(["1", 2])
        assert exc_info.value.path == [1]

    def test_length_bounds(self):
        """Test the minimum list length."""
        validator = List(Integer()).min(1)

        assert validator.validate([1]) == [1]
        with pytest.raises(SchemaError) as exc_info:
            validator.validate([])
        assert "at least 1 items" in str(exc_info.value)

    def test_unique(self):
        """Test that duplicates are reported at the second occurrence."""
        validator = List(String()).unique()

        assert validator.validate(["1", "2"]) == ["1", "2"]
        with pytest.raises(SchemaError) as exc_info:
            validator.validate(["1", "2", "1"])
        assert exc_info.value.path == [2]
        assert "first seen at [0]" in str(exc_info.value)


class TestRecordValidator:
    """Tests for the Record validator."""

    @pytest.fixture
    def arrow_record(self):
        return Record({"from": String(), "to": String(), "mult": Integer().positive().default(1)})

    def test_defaults_fill_missing_keys(self, arrow_record):
        """Test that defaulted keys are filled in."""
        assert arrow_record.validate({"from": "1", "to": "2"}) == {"from": "1", "to": "2", "mult": 1}
        assert arrow_record.validate({"from": "1", "to": "2", "mult": 3})["mult"] == 3

    def test_missing_required_keys(self, arrow_record):
        """Test that missing required keys are listed."""
        with pytest.raises(SchemaError) as exc_info:
            arrow_record.validate({"from": "1"})
        assert "Missing required properties: to" in str(exc_info.value)

    def test_unexpected_keys(self, arrow_record):
        """Test that unknown keys are rejected."""
        with pytest.raises(SchemaError) as exc_info:
            arrow_record.validate({"from": "1", "to": "2", "weight": 5})
        assert "weight" in str(exc_info.value)

    def test_nested_paths(self, arrow_record):
        """Test that nested errors report the full path."""
        document = Record({"arrows": List(arrow_record)})
        with pytest.raises(SchemaError) as exc_info:
            document.validate({"arrows": [{"from": "1", "to": "2"}, {"from": "1", "to": "3", "mult": 0}]})
        assert exc_info.value.path == ["arrows", 1, "mult"]
        assert str(exc_info.value).startswith("arrows → [1] → mult:")

    def test_optional_keys_are_omitted(self):
        """Test that an optional key without default stays absent."""
        record = Record({"label": String(), "note": String().optional()})
        assert record.validate({"label": "1"}) == {"label": "1"}

    def test_not_an_object(self, arrow_record):
        """Test rejecting non-dict input."""
        with pytest.raises(SchemaError) as exc_info:
            arrow_record.validate(["1", "2"])
        assert "Expected object, got list" in str(exc_info.value)

    def test_field_names(self, arrow_record):
        assert arrow_record.field_names == {"from", "to", "mult"}


class TestTaggedUnionValidator:
    """Tests for the TaggedUnion validator."""

    @pytest.fixture
    def events(self):
        return TaggedUnion("kind", {
            "mutate_at": Record({"kind": String(), "vertex": String()}),
            "mutate_sources": Record({"kind": String(), "vertices": List(String()).min(1)}),
        })

    def test_dispatch(self, events):
        """Test that the tag selects the record schema."""
        assert events.validate({"kind": "mutate_at", "vertex": "v4"}) == {"kind": "mutate_at", "vertex": "v4"}
        assert events.validate({"kind": "mutate_sources", "vertices": ["1"]})["vertices"] == ["1"]

    def test_missing_discriminator(self, events):
        """Test input without the tag field."""
        with pytest.raises(SchemaError) as exc_info:
            events.validate({"vertex": "1"})
        assert "Missing discriminator field 'kind'" in str(exc_info.value)

    def test_unknown_tag(self, events):
        """Test input with an unknown tag."""
        with pytest.raises(SchemaError) as exc_info:
            events.validate({"kind": "flip", "vertex": "1"})
        assert exc_info.value.path == ["kind"]
        assert "'mutate_at', 'mutate_sources'" in str(exc_info.value)

    def test_variant_errors(self, events):
        """Test that the selected schema's errors come through."""
        with pytest.raises(SchemaError) as exc_info:
            events.validate({"kind": "mutate_sources", "vertices": []})
        assert "at least 1 items" in str(exc_info.value)
