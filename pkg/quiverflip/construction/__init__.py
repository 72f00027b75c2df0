"""
The bipartitizing construction and its event log.
"""

from quiverflip.construction.events import (
    InsertVertex,
    MutateAt,
    MutateSources,
    MutationEvent,
    RunReport,
    Trace,
    apply_event,
    validate_trace,
)
from quiverflip.construction.steps import (
    bipartitize,
    mutate_sources,
    pick_subdividable_arrow,
    reverse_source_arrows,
    step1,
    step2,
    subdividable_arrows,
)

__all__ = [
    "InsertVertex",
    "MutateAt",
    "MutateSources",
    "MutationEvent",
    "RunReport",
    "Trace",
    "apply_event",
    "bipartitize",
    "mutate_sources",
    "pick_subdividable_arrow",
    "reverse_source_arrows",
    "step1",
    "step2",
    "subdividable_arrows",
    "validate_trace",
]
