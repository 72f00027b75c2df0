"""
Runtime configuration from environment variables.

Values are checked with the document validators so a bad setting fails with a
SchemaError naming the variable. Command-line flags override these values.
"""

import os
from dataclasses import dataclass
from typing import Mapping, Optional

from quiverflip.schema import Choice, Integer, Record

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

ENVIRONMENT_SCHEMA = Record({
    "QUIVERFLIP_STEP1_CAP_FACTOR": Integer().from_string().positive().default(10),
    "QUIVERFLIP_STEP1_MAX_ITERATIONS": Integer().from_string().non_negative().optional(),
    "QUIVERFLIP_LOG_LEVEL": Choice(LOG_LEVELS, case_insensitive=True).default("WARNING"),
})


@dataclass(frozen=True)
class Settings:
    """
    Iteration caps and logging defaults.

    Attributes:
        step1_cap_factor: Step 1 stops after factor · ℓ · (total arrow
            multiplicity of the input) iterations
        step1_max_iterations: Absolute Step 1 cap; overrides the factor
        log_level: Level name for the CLI's log handler
    """

    step1_cap_factor: int = 10
    step1_max_iterations: Optional[int] = None
    log_level: str = "WARNING"

    def step1_cap(self, ell: int, total_multiplicity: int) -> int:
        if self.step1_max_iterations is not None:
            return self.step1_max_iterations
        return self.step1_cap_factor * ell * total_multiplicity


def load_settings(environ: Optional[Mapping[str, str]] = None) -> Settings:
    """
    Read settings from the environment.

    Empty variables count as unset.

    Raises:
        SchemaError: If a variable holds an invalid value
    """
    environ = os.environ if environ is None else environ
    values = ENVIRONMENT_SCHEMA.validate({
        key: environ[key]
        for key in ENVIRONMENT_SCHEMA.field_names
        if environ.get(key, "").strip()
    })
    return Settings(
        step1_cap_factor=values["QUIVERFLIP_STEP1_CAP_FACTOR"],
        step1_max_iterations=values.get("QUIVERFLIP_STEP1_MAX_ITERATIONS"),
        log_level=values["QUIVERFLIP_LOG_LEVEL"],
    )
