"""
The two-step construction turning an acyclic quiver into a bipartite one.

Step 1 fixes ℓ, the longest path length of the input, and repeatedly picks an
arrow α lying on no path of length ℓ, frames it with a new vertex v
(arrows h(α)→v→t(α)) and mutates at v. This replaces one copy of α by the
detour t(α)→v→h(α). When every arrow lies on a length-ℓ path, every maximal
path has length ℓ.

Step 2 mutates at all sources at once until the quiver is bipartite, which
takes at most max(0, ℓ − 1) rounds; after round r every maximal path has
length 1 or max(1, ℓ − r).
"""

import logging
from typing import Optional

import numpy as np

from quiverflip.config import Settings, load_settings
from quiverflip.construction.events import (
    InsertVertex,
    MutateAt,
    MutateSources,
    MutationEvent,
    RunReport,
    Trace,
)
from quiverflip.core.mutation import mutate, mutate_sequence
from quiverflip.core.paths import (
    PathProfile,
    arrows_on_paths_of_length,
    is_acyclic,
    is_bipartite,
    path_profile,
    sources,
)
from quiverflip.core.quiver import Arrow, Quiver, VertexId, VertexLike, insert_framed_vertex
from quiverflip.exceptions import CyclicQuiverError, InvariantViolation, IterationCapExceeded

logger = logging.getLogger(__name__)


def subdividable_arrows(q: Quiver, ell: int) -> list[Arrow]:
    """
    Arrows lying on no oriented path of length ``ell``, in (tail, head) order.

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
    """
    on_paths = arrows_on_paths_of_length(q, ell)
    return [arrow for arrow in q.arrows() if arrow.pair not in on_paths]


def pick_subdividable_arrow(q: Quiver, ell: int,
                            rng: Optional[np.random.Generator] = None) -> Optional[Arrow]:
    """
    Choose the arrow Step 1 subdivides next.

    Args:
        q: Current state, acyclic
        ell: ℓ of the input quiver (not recomputed)
        rng: If given, draw uniformly among the candidates instead of taking
            the least (tail, head) pair

    Returns:
        The arrow bundle, or None when every arrow lies on a length-``ell`` path

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
    """
    candidates = subdividable_arrows(q, ell)
    if not candidates:
        return None
    if rng is None:
        return candidates[0]
    return candidates[int(rng.integers(len(candidates)))]


def mutate_sources(q: Quiver) -> tuple[Quiver, tuple[VertexId, ...]]:
    """Mutate at every source of ``q``; returns the new quiver and the sources in index order."""
    mutated = tuple(sorted(sources(q)))
    return mutate_sequence(q, mutated), mutated


def reverse_source_arrows(q: Quiver, vertices: tuple[VertexLike, ...]) -> Quiver:
    """Reverse every arrow incident to the given pairwise non-adjacent vertices."""
    signs = np.ones(q.n, dtype=np.int64)
    signs[[q.resolve(v) for v in vertices]] = -1
    return Quiver(q.matrix * np.outer(signs, signs), q.labels, q.provenance)


def step1(q: Quiver, *, max_iterations: Optional[int] = None,
          rng: Optional[np.random.Generator] = None,
          settings: Optional[Settings] = None) -> tuple[Quiver, Trace, RunReport]:
    """
    Subdivide arrows until every arrow lies on a path of length ℓ.

    Args:
        q: Acyclic input quiver Q^(0)
        max_iterations: Iteration cap; defaults to the configured cap
        rng: Random arrow choice for fuzzing; least arrow when None
        settings: Caps; read from the environment when None

    Returns:
        Q^(j), the Step 1 trace (j = iteration count) and its report

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
        IterationCapExceeded: If the cap is reached; carries the partial trace
        InvariantViolation: If a state gets an oriented cycle, a path longer
            than ℓ, or maximal paths of another length than ℓ at the end
    """
    profile = path_profile(q)
    ell = profile.ell
    if max_iterations is None:
        max_iterations = (settings or load_settings()).step1_cap(ell, q.total_multiplicity)

    events: list[MutationEvent] = []
    profiles: list[PathProfile] = [profile]
    current = q

    def partial() -> Trace:
        return Trace(q, tuple(events), len(events) // 2, ell, current)

    while (arrow := pick_subdividable_arrow(current, ell, rng)) is not None:
        if len(profiles) - 1 >= max_iterations:
            raise IterationCapExceeded(max_iterations, trace=partial())

        framed, v = insert_framed_vertex(current, arrow)
        current = mutate(framed, v)
        events.extend((InsertVertex(v, arrow.head, arrow.tail), MutateAt(v)))
        iteration = len(profiles)
        logger.debug("step 1 iteration %d: framed %s with %s", iteration, arrow, v.label)

        if not is_acyclic(current):
            raise InvariantViolation(
                f"oriented cycle after subdividing {arrow}", trace=partial(), state_index=iteration
            )
        profile = path_profile(current)
        if profile.ell > ell:
            raise InvariantViolation(
                f"longest path grew to {profile.ell} > ℓ = {ell}", trace=partial(), state_index=iteration
            )
        profiles.append(profile)

    j = len(profiles) - 1
    if ell >= 1 and profile.maximal_lengths != {ell}:
        raise InvariantViolation(
            f"maximal path lengths {sorted(profile.maximal_lengths)} after Step 1, expected [{ell}]",
            trace=partial(), state_index=j,
        )

    report = RunReport(step1_iterations=j, inserted_vertices=j, ell=ell, profiles=tuple(profiles))
    return current, partial(), report


def step2(q: Quiver, ell: int, j: int = 0) -> tuple[Quiver, Trace, RunReport]:
    """
    Mutate at all sources until the quiver is bipartite.

    Args:
        q: Q^(j), whose maximal paths all have length ``ell``
        ell: ℓ of the original input
        j: Index of ``q`` in the state sequence; only used in messages

    Returns:
        The bipartite quiver, a trace starting at ``q`` (its own ``j`` is 0)
        and a report whose profiles start with ``q``'s

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
        InvariantViolation: If the path-length law fails after a round, or
            the quiver is not bipartite within max(0, ℓ − 1) rounds
    """
    profiles: list[PathProfile] = [path_profile(q)]
    events: list[MutationEvent] = []
    current = q
    bound = max(0, ell - 1)

    def partial() -> Trace:
        return Trace(q, tuple(events), 0, ell, current)

    while not is_bipartite(current):
        rounds = len(events)
        if rounds >= max(ell, 1):
            raise InvariantViolation(
                f"not bipartite after {rounds} rounds", trace=partial(), state_index=j + rounds
            )
        current, mutated = mutate_sources(current)
        events.append(MutateSources(mutated))
        rounds += 1
        logger.debug("step 2 round %d: mutated at %s", rounds, ", ".join(v.label for v in mutated))

        try:
            profile = path_profile(current)
        except CyclicQuiverError as exc:
            raise InvariantViolation(str(exc), trace=partial(), state_index=j + rounds) from exc
        allowed = {1, max(1, ell - rounds)}
        if not profile.maximal_lengths <= allowed:
            raise InvariantViolation(
                f"maximal path lengths {sorted(profile.maximal_lengths)} after round {rounds}, "
                f"expected a subset of {sorted(allowed)}",
                trace=partial(), state_index=j + rounds,
            )
        profiles.append(profile)

    if len(events) > bound:
        raise InvariantViolation(
            f"Step 2 took {len(events)} rounds, bound is {bound}", trace=partial(), state_index=j + len(events)
        )

    report = RunReport(step2_iterations=len(events), ell=ell, profiles=tuple(profiles))
    return current, partial(), report


def bipartitize(q: Quiver, *, max_iterations: Optional[int] = None,
                rng: Optional[np.random.Generator] = None,
                settings: Optional[Settings] = None) -> tuple[Trace, RunReport]:
    """
    Run Step 1 then Step 2.

    Args:
        q: Acyclic input quiver
        max_iterations: Step 1 iteration cap; defaults to the configured cap
        rng: Random arrow choice in Step 1; least arrow when None
        settings: Caps; read from the environment when None

    Returns:
        The full trace from ``q`` to a bipartite quiver, and the run report

    Raises:
        CyclicQuiverError: If ``q`` has an oriented cycle
        InvariantViolation: If a guarantee of either step fails; the attached
            trace starts at ``q``
    """
    middle, trace1, report1 = step1(q, max_iterations=max_iterations, rng=rng, settings=settings)
    try:
        final, trace2, report2 = step2(middle, report1.ell, trace1.j)
    except InvariantViolation as exc:
        if exc.trace is not None:
            exc.trace = Trace(q, trace1.events + exc.trace.events, trace1.j, trace1.ell, exc.trace.final)
        raise

    trace = Trace(q, trace1.events + trace2.events, trace1.j, trace1.ell, final)
    report = RunReport(
        step1_iterations=report1.step1_iterations,
        step2_iterations=report2.step2_iterations,
        inserted_vertices=report1.inserted_vertices,
        ell=report1.ell,
        profiles=report1.profiles + report2.profiles[1:],
    )
    logger.info(
        "bipartitized %d-vertex quiver: ell=%d, %d subdivisions, %d source rounds",
        q.n, report.ell, report.step1_iterations, report.step2_iterations,
    )
    return trace, report
