"""Root systems, constant-term identities, and symmetric-space volume checks.

The heavy lifting lives in the C++ extension; this package re-exports it.
"""

from edl._core import (
    catalog_audit,
    catalog_labels,
    circular_closed,
    constant_term,
    lookup,
    macdonald_closed,
    mehta_closed,
    mehta_mc,
    opdam_closed,
    predict_macdonald,
    root_system_summary,
    selberg_closed,
    torus_integral,
    verify_restricted,
    verify_suite,
    weyl_order_by_enumeration,
)

__all__ = [
    "catalog_audit",
    "catalog_labels",
    "circular_closed",
    "constant_term",
    "lookup",
    "macdonald_closed",
    "mehta_closed",
    "mehta_mc",
    "opdam_closed",
    "predict_macdonald",
    "root_system_summary",
    "selberg_closed",
    "torus_integral",
    "verify_restricted",
    "verify_suite",
    "weyl_order_by_enumeration",
]

__version__ = "0.1.0"
