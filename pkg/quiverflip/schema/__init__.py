"""
Validators for the quiver and trace document formats.

This package contains the chainable validator classes used to define the
document schemas and to check configuration values.
"""

from quiverflip.schema.base import SchemaError, Validator
from quiverflip.schema.fields import Choice, Integer, String
from quiverflip.schema.collections import List, Record, TaggedUnion

__all__ = [
    "Validator",
    "SchemaError",
    "String",
    "Integer",
    "Choice",
    "List",
    "Record",
    "TaggedUnion",
]
