"""
quiverflip: turn acyclic quivers into bipartite ones by vertex insertions and
mutations, with a checkable record of every step.

The construction runs in two phases. Step 1 subdivides arrows with framed
vertices until every maximal path has the length of the longest one; Step 2
mutates at all sources simultaneously until the quiver is bipartite. The
trace of events certifies that the input is a full subquiver of a quiver
mutation-equivalent to the bipartite result.
"""

__version__ = "0.1.0"

# Import the commonly used API for convenient access
from quiverflip.core.quiver import Arrow, Provenance, Quiver, VertexId
from quiverflip.core.mutation import mutate, mutate_sequence
from quiverflip.core.paths import PathProfile, is_acyclic, is_bipartite, path_profile, sinks, sources
from quiverflip.construction.events import InsertVertex, MutateAt, MutateSources, RunReport, Trace
from quiverflip.construction.steps import bipartitize, step1, step2
from quiverflip.verify.certificate import EmbeddingCertificate, certify
from quiverflip.exceptions import (
    CyclicQuiverError,
    InvariantViolation,
    IterationCapExceeded,
    MalformedTraceError,
    QuiverError,
    ResourceLimitError,
    UsageError,
)


__all__ = [
    "Arrow",
    "CyclicQuiverError",
    "EmbeddingCertificate",
    "InsertVertex",
    "InvariantViolation",
    "IterationCapExceeded",
    "MalformedTraceError",
    "MutateAt",
    "MutateSources",
    "PathProfile",
    "Provenance",
    "Quiver",
    "QuiverError",
    "ResourceLimitError",
    "RunReport",
    "Trace",
    "UsageError",
    "VertexId",
    "bipartitize",
    "certify",
    "is_acyclic",
    "is_bipartite",
    "mutate",
    "mutate_sequence",
    "path_profile",
    "sinks",
    "sources",
    "step1",
    "step2",
]
