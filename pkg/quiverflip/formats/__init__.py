"""
File formats: JSON quiver and trace documents, DOT export.
"""

from quiverflip.formats.documents import (
    dump_quiver,
    dump_trace,
    parse_quiver,
    parse_trace,
    quiver_from_document,
    quiver_to_document,
    trace_from_document,
    trace_to_document,
)
from quiverflip.formats.dot import emit_dot

__all__ = [
    "dump_quiver",
    "dump_trace",
    "emit_dot",
    "parse_quiver",
    "parse_trace",
    "quiver_from_document",
    "quiver_to_document",
    "trace_from_document",
    "trace_to_document",
]
