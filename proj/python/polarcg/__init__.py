"""Exact angular-momentum coupling coefficients via the oscillator polar basis.

Quantum numbers are strings such as "1/2", "3/2" or "2". Every value is
computed in exact radical arithmetic; the returned dict carries the canonical
text form, the squared rational, the sign, and a float approximation.
"""

from ._polarcg import (
    DomainError,
    ResourceError,
    cg,
    ninej,
    passage,
    run_cli,
    sixj,
    table,
    threej,
)

__all__ = [
    "DomainError",
    "ResourceError",
    "cg",
    "ninej",
    "passage",
    "run_cli",
    "sixj",
    "table",
    "threej",
]
