"""Roller-coaster permutations: the statistic t, its maximizers, and their structure.

t(p) sums, over every subsequence of p with at least three values, the
number of maximal monotone runs in that subsequence.  The package computes t
two independent ways (a definitional brute-force walk and an O(n^2) closed
form, each the other's check), enumerates the permutations maximizing t over
S_n exhaustively and by structure-based pruning, machine-verifies the
structural properties of the maximizer sets, and persists results in a
checksummed append-only catalog with a CSV summary export.

>>> import rollercoaster as rc
>>> rc.t_fast((3, 4, 1, 2))
11
>>> rc.enumerate_rc_exhaustive(4).members
((2, 1, 4, 3), (2, 4, 1, 3), (3, 1, 4, 2), (3, 4, 1, 2))
"""

from .batch import (
    OracleDiffReport,
    fits_int64,
    oracle_diff,
    sample_permutations,
    t_bruteforce_batch,
    t_fast_batch,
)
from .catalog import (
    TOOL_VERSION,
    CatalogRecord,
    compute_checksum,
    default_catalog_path,
    export_sequence,
    read_records,
    write_record,
)
from .errors import (
    CatalogConflictError,
    CatalogCorruptionError,
    CatalogError,
    CostBoundError,
    InputError,
    NotAlternatingError,
    VerificationError,
)
from .perms import (
    RunStats,
    all_permutations,
    check_permutation,
    check_sequence,
    complement,
    format_permutation,
    parse_permutation,
    reverse,
    run_stats,
    subsequences_at_least_3,
    t_bruteforce,
)
from .search import (
    RCResult,
    SearchShard,
    enumerate_rc_exhaustive,
    enumerate_rc_pruned,
    generate_candidates,
    merge,
    plan_shards,
    run_shard,
)
from .stats import baseline_count, t_fast, t_max_bound
from .structure import (
    CHECK_IDS,
    AlternationKind,
    ParityClassReport,
    StructureReport,
    case_value_sets,
    classify_alternation,
    endpoint_diff_ok,
    is_recursively_alternating,
    parity_class_report,
    parity_separation_ok,
    split_odd_even,
    verify_structure,
)

__version__ = TOOL_VERSION

__all__ = [
    "AlternationKind",
    "CatalogConflictError",
    "CatalogCorruptionError",
    "CatalogError",
    "CatalogRecord",
    "CostBoundError",
    "InputError",
    "NotAlternatingError",
    "OracleDiffReport",
    "ParityClassReport",
    "RCResult",
    "RunStats",
    "SearchShard",
    "StructureReport",
    "TOOL_VERSION",
    "VerificationError",
    "CHECK_IDS",
    "all_permutations",
    "baseline_count",
    "case_value_sets",
    "check_permutation",
    "check_sequence",
    "classify_alternation",
    "complement",
    "compute_checksum",
    "default_catalog_path",
    "endpoint_diff_ok",
    "enumerate_rc_exhaustive",
    "enumerate_rc_pruned",
    "export_sequence",
    "fits_int64",
    "format_permutation",
    "generate_candidates",
    "is_recursively_alternating",
    "merge",
    "oracle_diff",
    "parity_class_report",
    "parity_separation_ok",
    "parse_permutation",
    "plan_shards",
    "read_records",
    "reverse",
    "run_shard",
    "run_stats",
    "sample_permutations",
    "split_odd_even",
    "subsequences_at_least_3",
    "t_bruteforce",
    "t_bruteforce_batch",
    "t_fast",
    "t_fast_batch",
    "t_max_bound",
    "verify_structure",
    "write_record",
]
