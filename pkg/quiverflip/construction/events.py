"""
Mutation events, traces and run reports.

A Trace is an event log: replaying its events from the input quiver
reproduces every intermediate state and the final bipartite quiver.
"""

from dataclasses import dataclass, field
from typing import Iterator, Union

from quiverflip.core.mutation import mutate
from quiverflip.core.paths import PathProfile
from quiverflip.core.quiver import Quiver, VertexId, insert_framed_vertex
from quiverflip.exceptions import MalformedTraceError, UsageError


@dataclass(frozen=True)
class InsertVertex:
    """A new vertex framed on an arrow α: arrows h(α)→v and v→t(α)."""

    vertex: VertexId
    head_of_alpha: VertexId
    tail_of_alpha: VertexId


@dataclass(frozen=True)
class MutateAt:
    """Mutation at one vertex."""

    vertex: VertexId


@dataclass(frozen=True)
class MutateSources:
    """Simultaneous mutation at a set of pairwise non-adjacent sources."""

    vertices: tuple[VertexId, ...]


MutationEvent = Union[InsertVertex, MutateAt, MutateSources]


def apply_event(q: Quiver, event: MutationEvent) -> Quiver:
    """
    Apply one event to a quiver state.

    Raises:
        MalformedTraceError: If the event does not fit the state
    """
    try:
        if isinstance(event, InsertVertex):
            if event.vertex.index != q.n:
                raise MalformedTraceError(
                    f"inserted vertex {event.vertex.label} has index {event.vertex.index}, expected {q.n}"
                )
            q, _ = insert_framed_vertex(
                q, (event.tail_of_alpha, event.head_of_alpha), label=event.vertex.label
            )
            return q
        if isinstance(event, MutateAt):
            return mutate(q, event.vertex)
        if isinstance(event, MutateSources):
            for v in event.vertices:
                q = mutate(q, v)
            return q
    except UsageError as exc:
        raise MalformedTraceError(str(exc)) from exc
    raise MalformedTraceError(f"unknown event {event!r}")


def validate_trace(trace: "Trace") -> None:
    """
    Check the event layout of a trace without replaying mutations.

    Step 1 contributes InsertVertex/MutateAt pairs on the same vertex, Step 2
    only MutateSources events, and the number of pairs equals ``trace.j``.

    Raises:
        MalformedTraceError: On the first offending event
    """
    events = trace.events
    pairs = 0
    i = 0
    while i < len(events) and isinstance(events[i], (InsertVertex, MutateAt)):
        event = events[i]
        if not isinstance(event, InsertVertex):
            raise MalformedTraceError("MutateAt without a preceding InsertVertex", i)
        follower = events[i + 1] if i + 1 < len(events) else None
        if not isinstance(follower, MutateAt) or follower.vertex != event.vertex:
            raise MalformedTraceError(
                f"InsertVertex {event.vertex.label} is not followed by MutateAt on the same vertex", i
            )
        pairs += 1
        i += 2
    for k in range(i, len(events)):
        if not isinstance(events[k], MutateSources):
            raise MalformedTraceError(f"{type(events[k]).__name__} after Step 2 began", k)
    if pairs != trace.j:
        raise MalformedTraceError(f"trace has {pairs} Step 1 iterations but j = {trace.j}")


@dataclass(frozen=True)
class Trace:
    """
    The event log linking an input quiver to the final quiver.

    Attributes:
        input: Q^(0)
        events: The ordered events
        j: Number of Step 1 iterations (Step 2 starts at state Q^(j))
        ell: Longest path length of the input
        final: The last state
    """

    input: Quiver
    events: tuple[MutationEvent, ...]
    j: int
    ell: int
    final: Quiver

    @property
    def step1_events(self) -> tuple[MutationEvent, ...]:
        return self.events[:2 * self.j]

    @property
    def step2_events(self) -> tuple[MutationEvent, ...]:
        return self.events[2 * self.j:]

    def states(self) -> Iterator[Quiver]:
        """
        Yield Q^(0), Q^(1), ... up to the last state.

        An InsertVertex/MutateAt pair is one Step 1 iteration; each
        MutateSources event is one Step 2 round.
        """
        q = self.input
        yield q
        for index, event in enumerate(self.events):
            try:
                q = apply_event(q, event)
            except MalformedTraceError as exc:
                raise MalformedTraceError(str(exc), index) from exc
            if not isinstance(event, InsertVertex):
                yield q

    def step1_states(self) -> list[Quiver]:
        """Q^(0), ..., Q^(j)."""
        return list(self.states())[:self.j + 1]


@dataclass(frozen=True)
class RunReport:
    """
    Counters and per-state profiles of one construction run.

    Attributes:
        step1_iterations: Number of subdivisions (j)
        step2_iterations: Number of source-mutation rounds
        inserted_vertices: Vertices added by Step 1
        ell: Longest path length of the input
        profiles: PathProfile of every state Q^(0), Q^(1), ...
    """

    step1_iterations: int = 0
    step2_iterations: int = 0
    inserted_vertices: int = 0
    ell: int = 0
    profiles: tuple[PathProfile, ...] = field(default=())

    @property
    def step2_bound(self) -> int:
        """Upper bound on Step 2 rounds: max(0, ℓ − 1)."""
        return max(0, self.ell - 1)

    def as_dict(self) -> dict[str, int]:
        return {
            "step1_iterations": self.step1_iterations,
            "step2_iterations": self.step2_iterations,
            "inserted_vertices": self.inserted_vertices,
            "ell": self.ell,
        }
