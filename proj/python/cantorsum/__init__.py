"""Exact subset-sum engine for Cantor-type integer sequences."""

from ._core import (  # noqa: F401
    IntSet,
    GeneratorTable,
    __version__,
    ap_content,
    build_table,
    check_prefix_condition,
    complement_in_prefix,
    construct_generators,
    density_report,
    digit_prefix_sums,
    expand_rational,
    floor_power_oracle,
    fs_bitmap,
    gap_index_correspondence,
    inverse_vdw,
    lemma23_extract,
    longest_ap,
    piecewise_shift_invariant,
    random_bounded_gap_set,
    random_stream,
    recover_generators,
    ruler_sequence,
    scaled_sumset,
    sumset,
    superincreasing,
    vdw_search,
    verify_converse,
    verify_delta_identity,
    verify_doubling_cover,
    witness_decompose,
    y_membership,
)
