"""Restricted self-sumset minimax toolkit for Z_n."""

from ._core import (  # noqa: F401
    __version__,
    affine_canonical_form,
    best_construction,
    block_partition,
    brute_force_phi,
    classify,
    coset_partition,
    coset_sumset_size,
    enumerate_optimal,
    evaluate_coloring,
    feasible,
    group_params,
    is_prime,
    largest_divisor_at_most,
    least_prime_divisor,
    lift_and_check_window,
    phi_exact,
    phi_lower_bound,
    phi_upper_bound,
    quotient_stats,
    restricted_sumset,
    stability_report,
    subgroup_of_size,
    verify_suite,
)
