"""
Signed permutations, type-B permutation and bare tableaux, the zigzag
bijections between them, and the weak order with tableau-level covering
moves - plus an exhaustive verification harness over desk-scale ranks.
"""

from .bruhat import (
    CoverMove,
    HassePoset,
    apply_cover,
    build_weak_order,
    classify_cover,
    export_poset,
    parse_poset_json,
    weak_covers,
)
from .perms import (
    PairSet,
    PathCycle,
    SignedPermutation,
    StatRecord,
    alignment_count,
    alignment_sets,
    basic_stats,
    compose,
    crossing_count,
    crossing_set,
    cycle_to_path_cycle,
    enumerate_group,
    full_cycle_notation,
    generator,
    identity,
    inversion_count,
    inversion_pairs,
    parse_cycles,
    parse_window,
    path_cycles,
    permutation_from_path_cycles,
)
from .shapes import Box, ShiftedShape, identity_shape, shape_from_rows
from .tableaux import (
    FillingStats,
    TableauB,
    empty_tableau,
    enumerate_tableaux,
    filling_stats,
    from_doc,
    from_json,
    is_valid,
    to_doc,
    to_json,
    validate,
)
from .verify import VerificationReport, run_verification
from .zigzag import (
    ZeroTypeMap,
    ZigzagTrace,
    classify_zeros,
    format_trace,
    pt_bt_convert,
    zeta,
    zeta_bare,
    zeta_bare_inverse,
    zeta_inverse,
    zigzag_path,
)

__all__ = [name for name in dir() if not name.startswith("_")]
