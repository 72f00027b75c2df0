"""
Certificates for construction runs and brute-force reference oracles.
"""

from quiverflip.verify.certificate import (
    EmbeddingCertificate,
    certify,
    reconstruct_ambient,
    replay_forward,
)
from quiverflip.verify.oracle import (
    ArrowQuiver,
    brute_force_profile,
    enumerate_paths,
    oracle_mutate,
)

__all__ = [
    "ArrowQuiver",
    "EmbeddingCertificate",
    "brute_force_profile",
    "certify",
    "enumerate_paths",
    "oracle_mutate",
    "reconstruct_ambient",
    "replay_forward",
]
