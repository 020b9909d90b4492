"""Set partitions in standard form, two equidistributed statistics, the
involution that swaps them, and the v-triangle of nonoverlapping-partition
counts, all backed by exhaustive brute-force verification.
"""

from .errors import (
    BoundError,
    DomainError,
    FormatError,
    NoNonsingletonBlock,
    OneIsSingleton,
    ParseError,
    PartinvError,
    PreconditionError,
    ValidationError,
)
from .involution import OrbitClass, orbit_class, sigma, sigma_inverse
from .partitions import (
    DEFAULT_MAX_N,
    SetPartition,
    Span,
    enumerate_all,
    enumerate_nonoverlapping,
    format_partition,
    is_nonoverlapping,
    normalize,
    parse,
    span,
)
from .patterns import (
    avoider_last_entry_distribution,
    contains_12adj_3,
    contains_1_23adj,
    is_avoider,
)
from .recurrence import VTable, bessel, binomial, v_compute, v_table
from .stats import StatPair, aux_r, aux_s, stat_pair, stat_x, stat_y
from .verify import (
    ALL_CHECKS,
    CheckReport,
    Counterexample,
    check_avoiders_match_v,
    check_equidistribution,
    check_involution,
    check_nonoverlapping,
    check_spans,
    check_y_matches_v,
    run_all,
)

__version__ = "0.1.0"

__all__ = [
    "ALL_CHECKS",
    "BoundError",
    "CheckReport",
    "Counterexample",
    "DEFAULT_MAX_N",
    "DomainError",
    "FormatError",
    "NoNonsingletonBlock",
    "OneIsSingleton",
    "OrbitClass",
    "ParseError",
    "PartinvError",
    "PreconditionError",
    "SetPartition",
    "Span",
    "StatPair",
    "VTable",
    "ValidationError",
    "aux_r",
    "aux_s",
    "avoider_last_entry_distribution",
    "bessel",
    "binomial",
    "check_avoiders_match_v",
    "check_equidistribution",
    "check_involution",
    "check_nonoverlapping",
    "check_spans",
    "check_y_matches_v",
    "contains_12adj_3",
    "contains_1_23adj",
    "enumerate_all",
    "enumerate_nonoverlapping",
    "format_partition",
    "is_avoider",
    "is_nonoverlapping",
    "normalize",
    "orbit_class",
    "parse",
    "run_all",
    "sigma",
    "sigma_inverse",
    "span",
    "stat_pair",
    "stat_x",
    "stat_y",
    "v_compute",
    "v_table",
]
