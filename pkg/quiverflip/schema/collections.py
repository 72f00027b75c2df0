"""
Structural validators: JSON arrays, fixed-schema objects and tagged event
records.
"""

from typing import Any, Mapping, Optional, Self

from quiverflip.schema.base import PathPart, SchemaError, Validator


def _type_name(data: Any) -> str:
    return type(data).__name__


class List(Validator[list[Any], list[Any]]):
    """
    Validator for arrays, optionally checking every item.

    Examples:
        >>> from quiverflip.schema.fields import String
        >>> List(String()).validate(["1", "2"])
        ['1', '2']
        >>> List(String()).unique().validate(["1", "1"])  # Raises SchemaError
    """

    def __init__(self, items: Optional[Validator] = None):
        super().__init__()
        self._items = items
        self._min_length: Optional[int] = None
        self._unique: bool = False

    def min(self, length: int) -> Self:
        return self._with(_min_length=length)

    def unique(self) -> Self:
        """Reject repeated items, reporting the later occurrence."""
        return self._with(_unique=True)

    def _validate(self, data: Any, path: list[PathPart]) -> list[Any]:
        if not isinstance(data, (list, tuple)):
            raise SchemaError(f"Expected list, got {_type_name(data)}", path)

        if self._min_length is not None and len(data) < self._min_length:
            raise SchemaError(f"List must have at least {self._min_length} items", path)

        if self._items is None:
            result = list(data)
        else:
            result = [self._items.validate(item, path + [i]) for i, item in enumerate(data)]

        if self._unique:
            first_seen: dict[Any, int] = {}
            for i, item in enumerate(result):
                if item in first_seen:
                    raise SchemaError(
                        f"Duplicate item {item!r} (first seen at [{first_seen[item]}])",
                        path + [i],
                    )
                first_seen[item] = i
        return result


class Record(Validator[dict[str, Any], dict[str, Any]]):
    """
    Validator for JSON objects with a fixed set of keys.

    Keys whose validator is neither optional nor defaulted are required and
    unknown keys are rejected. An optional key without a default is left out
    of the result when absent.

    Examples:
        >>> from quiverflip.schema.fields import Integer, String
        >>> Record({"from": String(), "to": String(), "mult": Integer().default(1)}).validate(
        ...     {"from": "1", "to": "2"})
        {'from': '1', 'to': '2', 'mult': 1}
    """

    def __init__(self, fields: Mapping[str, Validator]):
        super().__init__()
        self._fields: dict[str, Validator] = dict(fields)

    @property
    def field_names(self) -> set[str]:
        return set(self._fields)

    def _validate(self, data: Any, path: list[PathPart]) -> dict[str, Any]:
        if not isinstance(data, dict):
            raise SchemaError(f"Expected object, got {_type_name(data)}", path)

        missing = sorted(key for key, field in self._fields.items() if not field._optional and key not in data)
        if missing:
            raise SchemaError(f"Missing required properties: {', '.join(missing)}", path)

        unexpected = [str(key) for key in data if key not in self._fields]
        if unexpected:
            raise SchemaError(
                f"Unexpected additional properties: {', '.join(unexpected)}", path
            )

        result: dict[str, Any] = {}
        for key, field in self._fields.items():
            value = field.validate(data.get(key), path + [key])
            if value is not None or key in data:
                result[key] = value
        return result


class TaggedUnion(Validator[dict[str, Any], dict[str, Any]]):
    """
    Validator for records whose shape is selected by a tag field.

    Examples:
        >>> from quiverflip.schema.fields import String
        >>> events = TaggedUnion("kind", {
        ...     "mutate_at": Record({"kind": String(), "vertex": String()}),
        ... })
        >>> events.validate({"kind": "mutate_at", "vertex": "v4"})
        {'kind': 'mutate_at', 'vertex': 'v4'}
    """

    def __init__(self, tag: str, variants: Mapping[str, Validator]):
        super().__init__()
        self._tag = tag
        self._variants: dict[str, Validator] = dict(variants)

    def _validate(self, data: Any, path: list[PathPart]) -> dict[str, Any]:
        if not isinstance(data, dict):
            raise SchemaError(f"Expected object, got {_type_name(data)}", path)
        if self._tag not in data:
            raise SchemaError(f"Missing discriminator field '{self._tag}'", path)

        value = data[self._tag]
        variant = self._variants.get(value) if isinstance(value, str) else None
        if variant is None:
            allowed = ", ".join(repr(name) for name in self._variants)
            raise SchemaError(
                f"Unknown {self._tag} {value!r}, expected one of {allowed}",
                path + [self._tag],
            )
        return variant.validate(data, path)
