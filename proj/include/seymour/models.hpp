#pragma once

#include <cstdint>
#include <string>

#include "seymour/digraph.hpp"
#include "seymour/rng.hpp"

namespace seymour {

// Shared knobs for the two random models.  p is ignored by the tournament
// model; for the partial-orientation model it is the per-direction arc
// probability of the three-way draw (u->v with p, v->u with p, none with 1-2p).
struct ModelParams {
  int n = 1;
  double p = 0.5;
  std::uint64_t master_seed = 0;
};

// Stream for one trial: same (master_seed, trial) always yields the same graph,
// so trials can be generated out of order on any number of workers.
inline RngStream stream_for_trial(const ModelParams& params, std::uint64_t trial) {
  return RngStream(params.master_seed, trial);
}

// Uniform random orientation of every pair.  Consumes exactly one stream bit
// per unordered pair {u,v}, u < v in row-major pair order; bit 1 means u->v.
Tournament gen_tournament(int n, RngStream& rng);

// Three-way draw per unordered pair: one uniform x in [0,1), arc u->v when
// x < p, arc v->u when p <= x < 2p, no edge otherwise.  Same pair order and
// fixed stream consumption as gen_tournament.  Requires 0 <= p <= 1/2.
Digraph gen_digraph(int n, double p, RngStream& rng);

// Accepts "0.3", "3/10", "1/2"; rejects values outside [0, 1/2].
double parse_probability(const std::string& text);

}  // namespace seymour
