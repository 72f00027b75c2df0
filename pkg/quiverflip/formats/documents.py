"""
JSON documents for quivers and traces.

A quiver document lists vertices in index order and arrows by endpoint
labels::

    {
      "vertices": [{"label": "1", "provenance": "original"}, ...],
      "arrows": [{"from": "1", "to": "2", "mult": 1}, ...]
    }

A trace document holds the input and final quiver documents, the events with
vertices referenced by label, ℓ and j. Serialization is canonical: fixed key
order, arrows sorted by (tail index, head index), two-space indentation and a
trailing newline.
"""

import json
from typing import Any, Optional

from quiverflip.construction.events import InsertVertex, MutateAt, MutateSources, MutationEvent, Trace
from quiverflip.core.quiver import Provenance, Quiver, VertexId, zeros
from quiverflip.schema import Choice, Integer, List, Record, SchemaError, String, TaggedUnion
from quiverflip.schema.base import PathPart, format_path

LABEL = String().nonempty()

VERTEX = Record({
    "label": LABEL,
    "provenance": Choice([p.value for p in Provenance]).default(Provenance.ORIGINAL.value),
})

ARROW = Record({
    "from": LABEL,
    "to": LABEL,
    "mult": Integer().positive().default(1),
})

QUIVER_DOCUMENT = Record({
    "vertices": List(VERTEX),
    "arrows": List(ARROW).default(lambda: []),
})

EVENT = TaggedUnion("kind", {
    "insert_vertex": Record({"kind": String(), "vertex": LABEL, "head": LABEL, "tail": LABEL}),
    "mutate_at": Record({"kind": String(), "vertex": LABEL}),
    "mutate_sources": Record({"kind": String(), "vertices": List(LABEL).min(1).unique()}),
})

TRACE_DOCUMENT = Record({
    "input": QUIVER_DOCUMENT,
    "events": List(EVENT),
    "final": QUIVER_DOCUMENT,
    "ell": Integer().non_negative(),
    "j": Integer().non_negative(),
})


def _load_json(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"Invalid JSON: {exc.msg}", [f"line {exc.lineno}", f"column {exc.colno}"]) from None


def _dump_json(document: dict[str, Any]) -> str:
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"


def quiver_from_document(document: Any, path: Optional[list[PathPart]] = None) -> Quiver:
    """
    Build a quiver from a (parsed) quiver document.

    Args:
        document: The decoded JSON value
        path: Location of the document inside an enclosing one

    Raises:
        SchemaError: For schema violations, duplicate labels, dangling
            endpoints, loops, repeated pairs and 2-cycles; every problem
            found is reported with its field path
    """
    path = list(path or [])
    document = QUIVER_DOCUMENT.validate(document, path)
    problems = SchemaError()

    labels: list[str] = []
    index: dict[str, int] = {}
    for i, vertex in enumerate(document["vertices"]):
        label = vertex["label"]
        if label in index:
            problems.add_error(
                format_path(path + ["vertices", i, "label"]),
                f"Duplicate vertex label {label!r}",
            )
        else:
            index[label] = i
        labels.append(label)

    n = len(labels)
    matrix = zeros(n)
    seen: dict[tuple[str, str], int] = {}
    for i, arrow in enumerate(document["arrows"]):
        where = path + ["arrows", i]
        tail, head = arrow["from"], arrow["to"]
        dangling = [key for key in ("from", "to") if arrow[key] not in index]
        for key in dangling:
            problems.add_error(format_path(where + [key]), f"Unknown vertex label {arrow[key]!r}")
        if dangling:
            continue
        if tail == head:
            problems.add_error(format_path(where), f"Loop at vertex {tail!r}")
            continue
        if (tail, head) in seen:
            problems.add_error(
                format_path(where),
                f"Arrow {tail}→{head} repeated (first at arrows → [{seen[(tail, head)]}]); use mult",
            )
            continue
        if (head, tail) in seen:
            problems.add_error(
                format_path(where),
                f"Arrows {tail}→{head} and {head}→{tail} form a 2-cycle",
            )
            continue
        seen[(tail, head)] = i
        matrix[index[tail], index[head]] = arrow["mult"]
        matrix[index[head], index[tail]] = -arrow["mult"]

    if problems.errors:
        raise problems

    provenance = tuple(Provenance(vertex["provenance"]) for vertex in document["vertices"])
    return Quiver(matrix, tuple(labels), provenance)


def quiver_to_document(q: Quiver) -> dict[str, Any]:
    return {
        "vertices": [
            {"label": label, "provenance": provenance.value}
            for label, provenance in zip(q.labels, q.provenance)
        ],
        "arrows": [
            {"from": arrow.tail.label, "to": arrow.head.label, "mult": arrow.multiplicity}
            for arrow in q.arrows()
        ],
    }


def parse_quiver(text: str) -> Quiver:
    """
    Parse a quiver document.

    Raises:
        SchemaError: With line/column context for JSON syntax errors and a
            field path for everything else
    """
    return quiver_from_document(_load_json(text))


def dump_quiver(q: Quiver) -> str:
    """Canonical JSON text of a quiver."""
    return _dump_json(quiver_to_document(q))


def _event_to_record(event: MutationEvent) -> dict[str, Any]:
    if isinstance(event, InsertVertex):
        return {
            "kind": "insert_vertex",
            "vertex": event.vertex.label,
            "head": event.head_of_alpha.label,
            "tail": event.tail_of_alpha.label,
        }
    if isinstance(event, MutateAt):
        return {"kind": "mutate_at", "vertex": event.vertex.label}
    return {"kind": "mutate_sources", "vertices": [v.label for v in event.vertices]}


def _event_from_record(record: dict[str, Any], final: Quiver, path: list[PathPart]) -> MutationEvent:
    def vertex(label: str, *where: PathPart) -> VertexId:
        if label not in final.labels:
            raise SchemaError(f"Unknown vertex label {label!r}", path + list(where))
        return final.vertex(label)

    kind = record["kind"]
    if kind == "insert_vertex":
        return InsertVertex(
            vertex(record["vertex"], "vertex"),
            vertex(record["head"], "head"),
            vertex(record["tail"], "tail"),
        )
    if kind == "mutate_at":
        return MutateAt(vertex(record["vertex"], "vertex"))
    return MutateSources(tuple(
        vertex(label, "vertices", i) for i, label in enumerate(record["vertices"])
    ))


def trace_to_document(trace: Trace) -> dict[str, Any]:
    return {
        "input": quiver_to_document(trace.input),
        "events": [_event_to_record(event) for event in trace.events],
        "final": quiver_to_document(trace.final),
        "ell": trace.ell,
        "j": trace.j,
    }


def trace_from_document(document: Any) -> Trace:
    """
    Build a trace from a (parsed) trace document.

    Event vertices are resolved against the final quiver, which holds every
    input and inserted vertex.

    Raises:
        SchemaError: If the document or one of its quivers is invalid, or an
            event names a vertex absent from the final quiver
    """
    document = TRACE_DOCUMENT.validate(document)
    input = quiver_from_document(document["input"], ["input"])
    final = quiver_from_document(document["final"], ["final"])
    events = tuple(
        _event_from_record(record, final, ["events", i])
        for i, record in enumerate(document["events"])
    )
    return Trace(input, events, document["j"], document["ell"], final)


def parse_trace(text: str) -> Trace:
    """Parse a trace document."""
    return trace_from_document(_load_json(text))


def dump_trace(trace: Trace) -> str:
    """Canonical JSON text of a trace."""
    return _dump_json(trace_to_document(trace))
