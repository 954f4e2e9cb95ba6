"""Toric NCCR classification for rank-one Gorenstein toric singularities."""

import json

from ._nccr import (
    REPORT_VERSION,
    InternalError,
    NccrError,
    System,
    UsageError,
    ValidationError,
    load,
    loads,
    run_cli,
)


def from_weights(weights, free_rank=1, torsion=()):
    """Build a System from raw weight vectors, e.g. from_weights([[1], [1], [-1], [-1]])."""
    doc = {"group": {"free_rank": free_rank, "torsion": list(torsion)}, "weights": [list(w) for w in weights]}
    return loads(json.dumps(doc))


__all__ = [
    "REPORT_VERSION",
    "InternalError",
    "NccrError",
    "System",
    "UsageError",
    "ValidationError",
    "from_weights",
    "load",
    "loads",
    "run_cli",
]
