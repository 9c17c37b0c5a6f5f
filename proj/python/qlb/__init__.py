"""Python bindings for the qlb transfer-operator numerics library.

The heavy lifting lives in the compiled ``_qlb`` extension; this package
re-exports its operations under stable names. See ``qlb.run_config`` for
the full experiment surface shared with the command-line tool.
"""

from ._qlb import (
    QlbCapExceeded,
    QlbParseError,
    canonical_partition,
    gamma,
    hierarchy_levels,
    orbit_size,
    run_config,
    trajectory,
)

__all__ = [
    "QlbCapExceeded",
    "QlbParseError",
    "canonical_partition",
    "gamma",
    "hierarchy_levels",
    "orbit_size",
    "run_config",
    "trajectory",
]
