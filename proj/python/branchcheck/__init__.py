"""Exact verification of branching identities for generalized Verma modules."""

import json

from ._core import (
    AlgebraError,
    UsageError,
    branching_sets,
    canonical,
    gegenbauer,
    gegenbauer_tilde,
    hilbert_check,
    jacobi_t,
    ladder_constants,
    lowering_constant,
    orthogonality_integral,
    run_json,
    schema_version,
    singular_vector,
    version,
)

__version__ = version


def run(scenario, **kwargs):
    """Run a scenario and return (exit_code, report dict)."""
    code, text = run_json(scenario, **kwargs)
    return code, json.loads(text)


__all__ = [
    "AlgebraError",
    "UsageError",
    "branching_sets",
    "canonical",
    "gegenbauer",
    "gegenbauer_tilde",
    "hilbert_check",
    "jacobi_t",
    "ladder_constants",
    "lowering_constant",
    "orthogonality_integral",
    "run",
    "run_json",
    "schema_version",
    "singular_vector",
    "version",
]
