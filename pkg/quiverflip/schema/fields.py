"""
Scalar validators for document fields: vertex labels, multiplicities,
indices and enumerated tags.
"""

from typing import Any, Iterable, Optional, Self

from quiverflip.schema.base import PathPart, SchemaError, Validator


class String(Validator[str, str]):
    """
    Validator for string values.

    Examples:
        >>> String().validate("v4")
        'v4'
        >>> String().nonempty().validate("")  # Raises SchemaError
    """

    def __init__(self):
        super().__init__()
        self._nonempty: bool = False

    def nonempty(self) -> Self:
        return self._with(_nonempty=True)

    def _validate(self, data: Any, path: list[PathPart]) -> str:
        if not isinstance(data, str):
            raise SchemaError(f"Expected string, got {type(data).__name__}", path)
        if self._nonempty and not data:
            raise SchemaError("String cannot be empty", path)
        return data


class Integer(Validator[int, int]):
    """
    Validator for exact integers.

    Booleans are rejected and so are floats, even integral ones: exchange
    matrix entries and indices must be written as JSON integers.

    Examples:
        >>> Integer().positive().validate(2)
        2
        >>> Integer().validate(2.0)  # Raises SchemaError
    """

    def __init__(self):
        super().__init__()
        self._min_value: Optional[int] = None
        self._parse_strings: bool = False

    def min(self, value: int) -> Self:
        return self._with(_min_value=value)

    def positive(self) -> Self:
        return self.min(1)

    def non_negative(self) -> Self:
        return self.min(0)

    def from_string(self) -> Self:
        """Also accept decimal text, as found in environment variables."""
        return self._with(_parse_strings=True)

    def _coerce(self, data: Any, path: list[PathPart]) -> int:
        if self._parse_strings and isinstance(data, str):
            try:
                return int(data.strip())
            except ValueError:
                raise SchemaError(f"Expected integer, got {data!r}", path) from None
        if isinstance(data, bool) or not isinstance(data, int):
            raise SchemaError(f"Expected integer, got {type(data).__name__}", path)
        return data

    def _validate(self, data: Any, path: list[PathPart]) -> int:
        value = self._coerce(data, path)
        if self._min_value is not None and value < self._min_value:
            raise SchemaError(f"Integer must be at least {self._min_value}", path)
        return value


class Choice(Validator[str, str]):
    """
    Validator accepting one of a fixed set of strings, returned in its
    canonical spelling.

    Examples:
        >>> Choice(["original", "inserted"]).validate("inserted")
        'inserted'
        >>> Choice(["DEBUG", "INFO"], case_insensitive=True).validate("debug")
        'DEBUG'
    """

    def __init__(self, values: Iterable[str], case_insensitive: bool = False):
        super().__init__()
        self._values: tuple[str, ...] = tuple(values)
        self._case_insensitive = case_insensitive

    def _key(self, value: str) -> str:
        return value.upper() if self._case_insensitive else value

    def _validate(self, data: Any, path: list[PathPart]) -> str:
        if isinstance(data, str):
            for value in self._values:
                if self._key(value) == self._key(data):
                    return value

        allowed = ", ".join(repr(value) for value in self._values)
        raise SchemaError(f"Expected one of {allowed}, got {data!r}", path)
