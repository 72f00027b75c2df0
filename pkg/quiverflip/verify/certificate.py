"""
Certification of one construction run.

The ambient quiver R is recovered by undoing the recorded mutations on the
final quiver, most recent first, while keeping every inserted vertex. Matrix
mutation at k changes b[i][j] using only entries indexed by {i, j, k}, so
undoing the mutations restores the entries among the input vertices: the
input is the full subquiver of R on its own vertices, and R mutates to the
final bipartite quiver along the recorded sequence.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterator, Optional

from quiverflip.construction.events import (
    InsertVertex,
    MutateAt,
    MutateSources,
    Trace,
    apply_event,
    validate_trace,
)
from quiverflip.core.mutation import mutate, mutate_sequence
from quiverflip.core.paths import is_bipartite
from quiverflip.core.quiver import Quiver, VertexId, equal, restrict
from quiverflip.exceptions import MalformedTraceError, QuiverError, UsageError

logger = logging.getLogger(__name__)


def _mutation_vertices(trace: Trace) -> Iterator[VertexId]:
    """The recorded mutation sequence, in forward order."""
    for event in trace.events:
        if isinstance(event, MutateAt):
            yield event.vertex
        elif isinstance(event, MutateSources):
            yield from event.vertices


def replay_forward(input: Quiver, trace: Trace) -> Quiver:
    """
    Re-execute the trace's events from ``input``.

    Raises:
        MalformedTraceError: If ``input`` is not the trace's input, or an
            event references an unknown vertex
    """
    if not equal(input, trace.input):
        raise MalformedTraceError("trace was recorded for a different input quiver")
    validate_trace(trace)
    q = input
    for index, event in enumerate(trace.events):
        try:
            q = apply_event(q, event)
        except MalformedTraceError as exc:
            raise MalformedTraceError(str(exc), index) from exc
    return q


def reconstruct_ambient(trace: Trace) -> Quiver:
    """
    Undo the trace's mutations on ``trace.final``, keeping inserted vertices.

    MutateSources events are undone vertex by vertex in reverse order, using
    the recorded set verbatim.

    Returns:
        R on the final vertex set; its restriction to the input vertices is
        the input for a valid trace

    Raises:
        MalformedTraceError: If the events do not fit the final quiver
    """
    validate_trace(trace)
    r = trace.final
    for index in range(len(trace.events) - 1, -1, -1):
        event = trace.events[index]
        try:
            if isinstance(event, InsertVertex):
                r.resolve(event.vertex)
            elif isinstance(event, MutateAt):
                r = mutate(r, event.vertex)
            else:
                for v in reversed(event.vertices):
                    r = mutate(r, v)
        except UsageError as exc:
            raise MalformedTraceError(str(exc), index) from exc
    return r


@dataclass(frozen=True)
class EmbeddingCertificate:
    """
    Verdict on one run: the input is a full subquiver of a quiver R that is
    mutation equivalent to a bipartite quiver.

    Attributes:
        ambient: R, or None if the trace could not be replayed
        vertex_map: input vertex index → ambient vertex index (the identity)
        bipartite_ok: the final quiver is bipartite
        full_subquiver_ok: R restricted to the input vertices equals the input
        mutation_equivalent_ok: mutating R along the recorded sequence gives
            the final quiver, and so does replaying the events from the input
        reason: Why the trace could not be replayed, if it could not
    """

    ambient: Optional[Quiver]
    vertex_map: dict[int, int] = field(default_factory=dict)
    bipartite_ok: bool = False
    full_subquiver_ok: bool = False
    mutation_equivalent_ok: bool = False
    reason: Optional[str] = None

    @property
    def accepted(self) -> bool:
        return self.bipartite_ok and self.full_subquiver_ok and self.mutation_equivalent_ok

    def as_dict(self) -> dict[str, object]:
        return {
            "accepted": self.accepted,
            "bipartite_ok": self.bipartite_ok,
            "full_subquiver_ok": self.full_subquiver_ok,
            "mutation_equivalent_ok": self.mutation_equivalent_ok,
            "reason": self.reason,
        }


def certify(input: Quiver, trace: Trace) -> EmbeddingCertificate:
    """
    Check a trace against the claim it is meant to witness.

    Failures are reported in the certificate, never raised.
    """
    bipartite_ok = is_bipartite(trace.final)
    try:
        ambient = reconstruct_ambient(trace)
    except QuiverError as exc:
        logger.info("certificate rejected: %s", exc)
        return EmbeddingCertificate(None, bipartite_ok=bipartite_ok, reason=str(exc))

    vertex_map = {i: i for i in range(input.n)}
    full_subquiver_ok = ambient.n >= input.n and equal(restrict(ambient, range(input.n)), input)

    reason = None
    try:
        remutated = mutate_sequence(ambient, _mutation_vertices(trace))
        replayed = replay_forward(input, trace)
        mutation_equivalent_ok = equal(remutated, trace.final) and equal(replayed, trace.final)
        if not mutation_equivalent_ok:
            reason = "final quiver does not match the replayed events"
    except QuiverError as exc:
        mutation_equivalent_ok = False
        reason = str(exc)

    if not full_subquiver_ok and reason is None:
        reason = "input is not the full subquiver of the ambient quiver on its vertices"
    if not bipartite_ok and reason is None:
        reason = "final quiver is not bipartite"

    return EmbeddingCertificate(
        ambient=ambient,
        vertex_map=vertex_map,
        bipartite_ok=bipartite_ok,
        full_subquiver_ok=full_subquiver_ok,
        mutation_equivalent_ok=mutation_equivalent_ok,
        reason=reason,
    )
