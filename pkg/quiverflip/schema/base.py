"""
Base validator and error types for quiver and trace documents.

Every document field validator derives from `Validator`; any mismatch raises
`SchemaError` carrying the path of the offending field.
"""

from abc import abstractmethod
from typing import Any, Callable, Generic, Optional, TypeVar, cast

T = TypeVar("T")
R = TypeVar("R")

PathPart = str | int

BASE_FIELD = "_base"


def format_path(path: list[PathPart]) -> str:
    """Render a field path as ``arrows → [3] → to``."""
    if not path:
        return BASE_FIELD
    return " → ".join(f"[{part}]" if isinstance(part, int) else str(part) for part in path)


class SchemaError(ValueError):
    """A document that does not match its schema.

    Errors are kept per field, keyed by the rendered path, so one exception
    can report every problem the document parser finds:

        >>> str(SchemaError("Unknown vertex label '7'", ["arrows", 3, "to"]))
        "arrows → [3] → to: Unknown vertex label '7'"
    """

    def __init__(self, message: Optional[str] = None, path: Optional[list[PathPart]] = None):
        self.path: list[PathPart] = list(path or [])
        self.errors: dict[str, str] = {}
        if message:
            self.errors[format_path(self.path)] = message
        super().__init__(str(self))

    def __str__(self) -> str:
        if not self.errors:
            return "Document does not match its schema"
        return "\n".join(f"{field}: {message}" for field, message in self.errors.items())

    def add_error(self, field: str, message: str) -> None:
        """File another error under an already rendered field path."""
        self.errors[field] = message
        self.args = (str(self),)


class Validator(Generic[T, R]):
    """
    Base class of all document validators.

    Chaining methods never mutate: each returns a configured copy, so module
    level schema constants can be shared between parsers.

    Subclasses implement `_validate(data, path)`, which sees only non-None
    input; absent values are resolved here from `optional()` and `default()`.
    """

    def __init__(self):
        self._optional: bool = False
        self._default: Optional[T | Callable[[], T]] = None

    def _with(self, **attributes: Any) -> "Validator[T, R]":
        copy = self.__class__.__new__(self.__class__)
        copy.__dict__ = {**self.__dict__, **attributes}
        return copy

    def optional(self) -> "Validator[T, R | None]":
        """Accept a missing value as None."""
        return self._with(_optional=True)

    def default(self, value: T | Callable[[], T]) -> "Validator[T, R]":
        """Substitute `value` (or the result of calling it) for a missing value."""
        return self._with(_default=value, _optional=True)

    def _missing(self, path: list[PathPart]) -> R:
        if self._default is not None:
            value = self._default
            if callable(value) and not isinstance(value, type):
                value = value()
            return cast(R, value)
        if self._optional:
            return cast(R, None)
        raise SchemaError("Value is required", path)

    @abstractmethod
    def _validate(self, data: Any, path: list[PathPart]) -> R:
        """Validate non-None `data` found at `path`."""

    def validate(self, data: Any, path: Optional[list[PathPart]] = None) -> R:
        """
        Validate data, raising SchemaError on the first mismatch.

        Args:
            data: The decoded JSON value (or environment string) to check
            path: Field path prefix used in error messages

        Returns:
            The validated, possibly converted, value
        """
        if data is None:
            return self._missing(list(path or []))
        return self._validate(data, list(path or []))
