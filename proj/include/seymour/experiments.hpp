#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seymour/digraph.hpp"
#include "seymour/models.hpp"

namespace seymour {

enum class Model { tournament, digraph };

// One Monte Carlo run description.  `n_list` drives the deviation experiment;
// everything else uses the single `n`.
struct ExperimentConfig {
  Model model = Model::tournament;
  int n = 1;
  std::vector<int> n_list;
  double p = 0.5;                     // digraph model only
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
  std::optional<double> deviation_A;        // threshold A*sqrt(n*ln n)
  std::optional<double> deviation_epsilon;  // threshold n^(1/2+eps)
  bool want_min_ratio = false;  // forces the general kernel; off by default
};

struct TrialStats {
  std::uint64_t trials = 0;
  double mean_s = 0.0;
  double var_s = 0.0;  // unbiased sample variance
  std::map<int, std::uint64_t> histogram;
  double frac_all_seymour = 0.0;
  // NaN when no deviation threshold was configured.
  double frac_deviating = 0.0;
  // Mean over trials of min_v |N2(v)|/|N1(v)| (vertices with |N1| = 0 are
  // skipped); NaN unless want_min_ratio was set.
  double mean_ratio_min = 0.0;
};

// Aggregated record for one size during tournament growth.
struct EvolutionStep {
  int n = 0;
  double mean_s = 0.0;
  double mean_borderline_seymour = 0.0;     // in-degree == out-degree (odd n)
                                            // or in-degree - out-degree == 1 (even n)
  double mean_borderline_nonseymour = 0.0;  // out-degree - in-degree == 1
  double mean_gained = 0.0;                 // vertices that became Seymour this step
  double mean_lost = 0.0;                   // vertices that stopped being Seymour
  double frac_diam2 = 0.0;                  // fraction of trials with all ecc <= 2
};

struct EvolutionTrace {
  int n_start = 0;
  int n_end = 0;
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  std::vector<EvolutionStep> steps;  // one per n in [n_start, n_end]
};

// Exact rational with a gcd-reduced 128-bit fraction; wide enough for the
// second-moment arithmetic of full enumerations up to the size caps.
struct ExactRational {
  __int128 num = 0;
  __int128 den = 1;

  void reduce();
  double approx() const;
  std::string str() const;  // "num/den" after reduction
  bool operator==(const ExactRational&) const = default;
};

struct ExactSummary {
  int n = 0;
  std::uint64_t total_graphs = 0;
  ExactRational exact_e_s;
  ExactRational exact_var_s;
  int min_s = 0;
  std::map<int, std::uint64_t> histogram;
};

// Per-n row of the deviation experiment; fractions are NaN when the matching
// threshold parameter was not supplied.
struct DeviationRow {
  int n = 0;
  std::uint64_t trials = 0;
  double mean_s = 0.0;
  double var_s = 0.0;
  double frac_all_seymour = 0.0;
  double threshold_sqrt = 0.0;  // A*sqrt(n*ln n)
  double frac_sqrt = 0.0;
  double threshold_pow = 0.0;  // n^(1/2+eps)
  double frac_pow = 0.0;
};

// trials independent tournaments on cfg.n vertices; |S| per trial via the
// degree rule when every eccentricity is <= 2, general bitset count otherwise.
// Deterministic for fixed (cfg, master_seed) at any worker count.
TrialStats run_tournament_trials(const ExperimentConfig& cfg);

// Same harness for the three-way-draw digraph model.
TrialStats run_digraph_trials(const ExperimentConfig& cfg);

// Per-n deviation fractions against both threshold styles; needs cfg.n_list,
// trials >= 1000, and at least one of deviation_A / deviation_epsilon.
std::vector<DeviationRow> deviation_experiment(const ExperimentConfig& cfg);

// Grows one tournament per trial from n_start to n_end one vertex at a time,
// re-evaluating |S|, borderline degrees, and per-vertex status flips at every
// size.  Full BFS audit of the degree rule every 16 steps.
EvolutionTrace evolve_experiment(int n_start, int n_end, std::uint64_t trials,
                                 std::uint64_t master_seed, int workers = 1);

// All 2^C(n,2) labeled tournaments.  n <= 7 unless allow_large (hard code cap
// n <= 11, where the counters would still be exact).
ExactSummary exhaustive_tournaments(int n, bool allow_large = false);

// All 3^C(n,2) labeled digraphs without anti-parallel pairs.  n <= 5 unless
// allow_large (hard cap n <= 6).
ExactSummary exhaustive_digraphs(int n, bool allow_large = false);

// Sample Var|S| / n from run_tournament_trials; trials >= 1000.
double variance_constant_estimate(int n, std::uint64_t trials, std::uint64_t master_seed);

}  // namespace seymour
