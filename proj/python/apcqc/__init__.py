"""APC distance and logic-state quantum code toolkit over F_p.

Thin wrapper over the C++ core. Truth tables are lists of p^n residues in
big-endian x1 order; vectors are lists of n residues.
"""

from apcqc._core import (
    add_linear,
    apc_distance,
    apply_error,
    build_betas_large_p,
    build_betas_small_p,
    build_state,
    char_sum,
    check_wh_constraint,
    code_distance,
    dot,
    inner,
    is_prime,
    kl_check,
    kl_distance,
    max_K,
    mds_condition,
    mds_saturates,
    parse_poly,
    singleton_bound_K,
    wh,
    ws,
)

__all__ = [
    "add_linear",
    "apc_distance",
    "apply_error",
    "build_betas_large_p",
    "build_betas_small_p",
    "build_state",
    "char_sum",
    "check_wh_constraint",
    "code_distance",
    "dot",
    "inner",
    "is_prime",
    "kl_check",
    "kl_distance",
    "max_K",
    "mds_condition",
    "mds_saturates",
    "parse_poly",
    "singleton_bound_K",
    "wh",
    "ws",
]

__version__ = "0.1.0"
