// Statistical checks that need larger Monte Carlo budgets than the unit
// suite; everything is seeded, so results are reproducible bit for bit.
#include <cmath>
#include <vector>

#include "doctest.h"
#include "seymour/analytics.hpp"
#include "seymour/experiments.hpp"

using namespace seymour;

namespace {

TrialStats sample_tournaments(int n, std::uint64_t trials, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.model = Model::tournament;
  cfg.n = n;
  cfg.trials = trials;
  cfg.master_seed = seed;
  return run_tournament_trials(cfg);
}

}  // namespace

TEST_CASE("sampled mean sits inside the closed-form sandwich (n = 25)") {
  const BoundsReport b = tournament_expectation_bounds(25);
  const TrialStats st = sample_tournaments(25, 40000, 401);
  const double se = std::sqrt(st.var_s / 40000.0);
  CHECK(st.mean_s >= b.e_s_lower - 4 * se);
  CHECK(st.mean_s <= b.e_s_upper + 4 * se);
  // The sandwich is tight here: its width is under one vertex.
  CHECK(b.e_s_upper - b.e_s_lower < 1.0);
}

TEST_CASE("sampled mean sits inside the closed-form sandwich (n = 201)") {
  const BoundsReport b = tournament_expectation_bounds(201);
  const TrialStats st = sample_tournaments(201, 20000, 402);
  const double se = std::sqrt(st.var_s / 20000.0);
  CHECK(st.mean_s >= b.e_s_lower - 4 * se);
  CHECK(st.mean_s <= b.e_s_upper + 4 * se);
  CHECK_FALSE(b.lower_clamped);
  CHECK_FALSE(b.upper_clamped);
}

TEST_CASE("odd sizes hold slightly more than half the vertices on average") {
  // At odd n the qualifying-probability tail P(Bin(n-1,1/2) <= (n-1)/2)
  // exceeds 1/2 by the half-central term, so E|S|/n stays above 1/2.
  const TrialStats st = sample_tournaments(101, 20000, 403);
  const double tail = binom_tail_le(100, 0.5, 50);
  const double se = std::sqrt(st.var_s / 20000.0);
  CHECK(tail > 0.5);
  // The sandwich width at n = 101 is ~4e-10, so 101*tail is the mean to
  // within sampling error.
  CHECK(std::abs(st.mean_s - 101.0 * tail) <= 4.5 * se);
  CHECK(st.mean_s / 101.0 > 0.5);
}

TEST_CASE("sampled variance per vertex approaches the even-parity constant") {
  // 5000 trials at n = 301: sd of the variance estimate is about
  // var * sqrt(2/trials) ~= 0.55, i.e. ~0.0018 per vertex; the band below
  // is roughly +-4 of those around the exact value 0.09054.
  const TrialStats st = sample_tournaments(301, 5000, 404);
  CHECK(st.var_s / 301.0 > 0.083);
  CHECK(st.var_s / 301.0 < 0.098);
}

TEST_CASE("large-size deviation fractions vanish under a power threshold") {
  ExperimentConfig cfg;
  cfg.model = Model::tournament;
  cfg.n_list = {10000};
  cfg.trials = 1000;
  cfg.master_seed = 405;
  cfg.deviation_epsilon = 0.25;
  const std::vector<DeviationRow> rows = deviation_experiment(cfg);
  REQUIRE(rows.size() == 1);
  // Threshold n^(0.75) = 1000 dwarfs the ~30-vertex standard deviation.
  CHECK(rows[0].threshold_pow == doctest::Approx(1000.0));
  CHECK(rows[0].frac_pow == 0.0);
  CHECK(std::abs(rows[0].mean_s / 10000.0 - 0.5) < 0.01);
}

TEST_CASE("three-way-draw model: middle of the window puts every vertex in S") {
  ExperimentConfig cfg;
  cfg.model = Model::digraph;
  cfg.n = 800;
  cfg.p = 0.3;
  cfg.trials = 100;
  cfg.master_seed = 406;
  const TrialStats st = run_digraph_trials(cfg);
  CHECK(st.frac_all_seymour == 1.0);
  CHECK(st.mean_s == 800.0);
  // And the closed-form lower bound concurs up to its defect term.
  const DigraphLowerBound lb = digraph_expectation_lower(800, 0.3);
  CHECK(lb.value > 799.999);
}

TEST_CASE("three-way-draw model: below the window S can lose vertices") {
  // p far under p_min ~ sqrt(2 ln n / n): isolated vertices appear (S still
  // contains them), but vertices with exactly one out-neighbor and no second
  // neighborhood drop out, pulling the mean under n.
  ExperimentConfig cfg;
  cfg.model = Model::digraph;
  cfg.n = 400;
  cfg.p = 0.004;
  cfg.trials = 400;
  cfg.master_seed = 407;
  const TrialStats st = run_digraph_trials(cfg);
  CHECK(st.frac_all_seymour < 0.5);
  CHECK(st.mean_s < 400.0);
}

TEST_CASE("variance ratio between adjacent parities stays near one") {
  // Exact degree-rule variance puts both parities by the same constant; the
  // sampled ratio at 4000 trials has sd ~2%, so [0.9, 1.1] is a wide band.
  const double even = variance_constant_estimate(500, 4000, 408);
  const double odd = variance_constant_estimate(501, 4000, 409);
  CHECK(odd / even > 0.9);
  CHECK(odd / even < 1.1);
}
