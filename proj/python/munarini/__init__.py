"""Exact workbench for a multinomial Munarini-type identity.

Thin wrapper over the C++ core; see the individual functions for the
symbolic builders, randomized identity testing, configuration-space
enumeration and the involution audit.
"""

from ._munarini import (
    audit,
    count,
    enumerate_configs,
    eq3_lhs,
    eq3_rhs,
    factorial,
    falling_factorial,
    fixed_point_sum,
    multinomial,
    reduce_checks,
    signed_sum,
    validate_config,
    verify_random,
    verify_symbolic,
)

__all__ = [
    "audit",
    "count",
    "enumerate_configs",
    "eq3_lhs",
    "eq3_rhs",
    "factorial",
    "falling_factorial",
    "fixed_point_sum",
    "multinomial",
    "reduce_checks",
    "signed_sum",
    "validate_config",
    "verify_random",
    "verify_symbolic",
]
