"""Seymour vertices in random tournaments and digraphs.

A vertex v is a Seymour vertex when its second out-neighborhood is at least
as large as its first: ``|N2(v)| >= |N1(v)|``.  This package wraps the C++
core: reproducible random models (uniform tournaments and the three-way-draw
digraph model), bitset Seymour-set kernels, Monte Carlo experiment drivers,
exhaustive small-n enumeration with exact rational statistics, and the
closed-form expectation/variance/window analytics.

All randomness is counter-based: ``(master_seed, trial)`` fully determines a
graph, so experiments are reproducible at any worker count.
"""

from ._core import (
    UNREACHABLE,
    Digraph,
    __version__,
    binom_tail_le,
    central_binom_pmf,
    central_binom_stirling,
    chernoff_upper,
    deviation_experiment,
    digraph_expectation_lower,
    digraph_window,
    distances_from,
    eccentricity_at_most_2,
    evolve,
    exhaustive_digraphs,
    exhaustive_tournaments,
    expectation_bounds,
    find_triangle,
    first_neighborhood,
    gen_digraph,
    gen_tournament,
    is_tournament,
    neighborhood_profiles,
    p1_upper_bound,
    parse_probability,
    run_trials,
    second_neighborhood,
    seymour_set,
    seymour_set_degree_criterion,
    variance_asymptote,
    variance_coeff_even,
    variance_coeff_odd,
    variance_constant_estimate,
    variance_pi_terms,
)

__all__ = [
    "UNREACHABLE",
    "Digraph",
    "__version__",
    "binom_tail_le",
    "central_binom_pmf",
    "central_binom_stirling",
    "chernoff_upper",
    "deviation_experiment",
    "digraph_expectation_lower",
    "digraph_window",
    "distances_from",
    "eccentricity_at_most_2",
    "evolve",
    "exhaustive_digraphs",
    "exhaustive_tournaments",
    "expectation_bounds",
    "find_triangle",
    "first_neighborhood",
    "gen_digraph",
    "gen_tournament",
    "is_tournament",
    "neighborhood_profiles",
    "p1_upper_bound",
    "parse_probability",
    "run_trials",
    "second_neighborhood",
    "seymour_set",
    "seymour_set_degree_criterion",
    "variance_asymptote",
    "variance_coeff_even",
    "variance_coeff_odd",
    "variance_constant_estimate",
    "variance_pi_terms",
]
