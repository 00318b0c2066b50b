#include "seymour/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstring>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "seymour/bitops.hpp"
#include "seymour/graph_ops.hpp"

namespace seymour {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

std::string int128_str(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

// Runs fn(t) for t in [0, trials) across a bounded pool; the shared counter
// hands out indices, and any worker exception aborts the remaining work.
void run_parallel(std::uint64_t trials, int workers,
                  const std::function<void(std::uint64_t)>& fn) {
  if (workers < 1) workers = 1;
  if (static_cast<std::uint64_t>(workers) > trials) {
    workers = static_cast<int>(trials);
  }
  if (workers <= 1) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::mutex err_mu;
  std::exception_ptr err;
  auto body = [&]() {
    try {
      for (std::uint64_t t;
           (t = next.fetch_add(1, std::memory_order_relaxed)) < trials;) {
        fn(t);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next.store(trials, std::memory_order_relaxed);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

int tournament_trial_count(int n, std::uint64_t seed, std::uint64_t trial,
                           double* min_ratio) {
  RngStream rng(seed, trial);
  const Tournament t = gen_tournament(n, rng);
  const RowView view = t.view();
  if (min_ratio) return detail::seymour_count_general(view, min_ratio);
  if (detail::closure_covers_all(view)) return detail::degree_criterion_count(view);
  return detail::seymour_count_general(view);
}

int digraph_trial_count(int n, double p, std::uint64_t seed, std::uint64_t trial,
                        double* min_ratio) {
  RngStream rng(seed, trial);
  const Digraph g = gen_digraph(n, p, rng);
  return detail::seymour_count_general(g.view(), min_ratio);
}

// Deterministic reduction of per-trial counts: all sums are integers taken in
// trial order, so the result is independent of which worker ran which trial.
TrialStats aggregate_counts(const ExperimentConfig& cfg, const std::vector<int>& counts,
                            const std::vector<double>* ratios) {
  TrialStats st;
  st.trials = counts.size();
  const std::uint64_t trials = st.trials;
  std::uint64_t s1 = 0;
  unsigned __int128 s2 = 0;
  std::uint64_t all = 0;
  for (const int c : counts) {
    s1 += static_cast<std::uint64_t>(c);
    s2 += static_cast<unsigned __int128>(c) * static_cast<unsigned __int128>(c);
    ++st.histogram[c];
    if (c == cfg.n) ++all;
  }
  const long double tl = static_cast<long double>(trials);
  const long double mean = static_cast<long double>(s1) / tl;
  st.mean_s = static_cast<double>(mean);
  if (trials > 1) {
    const unsigned __int128 num =
        static_cast<unsigned __int128>(trials) * s2 -
        static_cast<unsigned __int128>(s1) * static_cast<unsigned __int128>(s1);
    st.var_s = static_cast<double>(static_cast<long double>(num) / (tl * (tl - 1.0L)));
  } else {
    st.var_s = 0.0;
  }
  st.frac_all_seymour = static_cast<double>(static_cast<long double>(all) / tl);

  if (cfg.deviation_A || cfg.deviation_epsilon) {
    double threshold = 0.0;
    if (cfg.deviation_A) {
      threshold = *cfg.deviation_A *
                  std::sqrt(static_cast<double>(cfg.n) * std::log(static_cast<double>(cfg.n)));
    } else {
      threshold = std::pow(static_cast<double>(cfg.n), 0.5 + *cfg.deviation_epsilon);
    }
    std::uint64_t dev = 0;
    for (const int c : counts) {
      if (std::abs(static_cast<double>(c) - st.mean_s) >= threshold) ++dev;
    }
    st.frac_deviating = static_cast<double>(static_cast<long double>(dev) / tl);
  } else {
    st.frac_deviating = kNaN;
  }

  if (ratios) {
    long double sum = 0.0L;
    std::uint64_t finite = 0;
    for (const double r : *ratios) {
      if (std::isfinite(r)) {
        sum += r;
        ++finite;
      }
    }
    st.mean_ratio_min =
        finite > 0 ? static_cast<double>(sum / static_cast<long double>(finite)) : kNaN;
  } else {
    st.mean_ratio_min = kNaN;
  }
  return st;
}

void validate_common(const ExperimentConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("experiment: n must be >= 1");
  if (cfg.trials < 1) throw std::invalid_argument("experiment: trials must be >= 1");
}

TrialStats run_counting_trials(const ExperimentConfig& cfg,
                               const std::function<int(std::uint64_t, double*)>& one_trial) {
  std::vector<int> counts(cfg.trials);
  std::vector<double> ratios;
  if (cfg.want_min_ratio) ratios.assign(cfg.trials, kNaN);
  run_parallel(cfg.trials, cfg.workers, [&](std::uint64_t t) {
    double ratio = kNaN;
    counts[t] = one_trial(t, cfg.want_min_ratio ? &ratio : nullptr);
    if (cfg.want_min_ratio) ratios[t] = ratio;
  });
  return aggregate_counts(cfg, counts, cfg.want_min_ratio ? &ratios : nullptr);
}

}  // namespace

void ExactRational::reduce() {
  if (den < 0) {
    den = -den;
    num = -num;
  }
  if (num == 0) {
    den = 1;
    return;
  }
  const unsigned __int128 a =
      num < 0 ? static_cast<unsigned __int128>(-(num + 1)) + 1
              : static_cast<unsigned __int128>(num);
  const unsigned __int128 g = gcd128(a, static_cast<unsigned __int128>(den));
  if (g > 1) {
    num /= static_cast<__int128>(g);
    den /= static_cast<__int128>(g);
  }
}

double ExactRational::approx() const {
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

std::string ExactRational::str() const {
  ExactRational r = *this;
  r.reduce();
  return int128_str(r.num) + "/" + int128_str(r.den);
}

TrialStats run_tournament_trials(const ExperimentConfig& cfg) {
  if (cfg.model != Model::tournament) {
    throw std::invalid_argument("run_tournament_trials: config model mismatch");
  }
  validate_common(cfg);
  return run_counting_trials(cfg, [&](std::uint64_t t, double* ratio) {
    return tournament_trial_count(cfg.n, cfg.master_seed, t, ratio);
  });
}

TrialStats run_digraph_trials(const ExperimentConfig& cfg) {
  if (cfg.model != Model::digraph) {
    throw std::invalid_argument("run_digraph_trials: config model mismatch");
  }
  validate_common(cfg);
  if (!(cfg.p >= 0.0 && cfg.p <= 0.5)) {
    throw std::invalid_argument("run_digraph_trials: p must lie in [0, 1/2]");
  }
  return run_counting_trials(cfg, [&](std::uint64_t t, double* ratio) {
    return digraph_trial_count(cfg.n, cfg.p, cfg.master_seed, t, ratio);
  });
}

std::vector<DeviationRow> deviation_experiment(const ExperimentConfig& cfg) {
  if (cfg.n_list.empty()) {
    throw std::invalid_argument("deviation_experiment: n list must be non-empty");
  }
  if (cfg.trials < 1000) {
    throw std::invalid_argument("deviation_experiment: trials must be >= 1000");
  }
  if (!cfg.deviation_A && !cfg.deviation_epsilon) {
    throw std::invalid_argument(
        "deviation_experiment: need a threshold parameter (A or epsilon)");
  }
  std::vector<DeviationRow> rows;
  rows.reserve(cfg.n_list.size());
  for (const int n : cfg.n_list) {
    if (n < 1) throw std::invalid_argument("deviation_experiment: n must be >= 1");
    std::vector<int> counts(cfg.trials);
    run_parallel(cfg.trials, cfg.workers, [&](std::uint64_t t) {
      counts[t] = cfg.model == Model::tournament
                      ? tournament_trial_count(n, cfg.master_seed, t, nullptr)
                      : digraph_trial_count(n, cfg.p, cfg.master_seed, t, nullptr);
    });
    ExperimentConfig sized = cfg;
    sized.n = n;
    const TrialStats st = aggregate_counts(sized, counts, nullptr);
    DeviationRow row;
    row.n = n;
    row.trials = cfg.trials;
    row.mean_s = st.mean_s;
    row.var_s = st.var_s;
    row.frac_all_seymour = st.frac_all_seymour;
    const auto frac_over = [&](double threshold) {
      std::uint64_t dev = 0;
      for (const int c : counts) {
        if (std::abs(static_cast<double>(c) - row.mean_s) >= threshold) ++dev;
      }
      return static_cast<double>(static_cast<long double>(dev) /
                                 static_cast<long double>(cfg.trials));
    };
    if (cfg.deviation_A) {
      row.threshold_sqrt = *cfg.deviation_A *
                           std::sqrt(static_cast<double>(n) * std::log(static_cast<double>(n)));
      row.frac_sqrt = frac_over(row.threshold_sqrt);
    } else {
      row.threshold_sqrt = kNaN;
      row.frac_sqrt = kNaN;
    }
    if (cfg.deviation_epsilon) {
      row.threshold_pow = std::pow(static_cast<double>(n), 0.5 + *cfg.deviation_epsilon);
      row.frac_pow = frac_over(row.threshold_pow);
    } else {
      row.threshold_pow = kNaN;
      row.frac_pow = kNaN;
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

// Per-size integer accumulators; integer addition commutes, so merging worker
// contributions in any order leaves the final trace bit-identical.
struct EvolveSums {
  std::vector<std::uint64_t> s, borderline_s, borderline_ns, gained, lost, diam2;
  explicit EvolveSums(std::size_t sizes)
      : s(sizes, 0), borderline_s(sizes, 0), borderline_ns(sizes, 0),
        gained(sizes, 0), lost(sizes, 0), diam2(sizes, 0) {}
  void add(const EvolveSums& o) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      s[i] += o.s[i];
      borderline_s[i] += o.borderline_s[i];
      borderline_ns[i] += o.borderline_ns[i];
      gained[i] += o.gained[i];
      lost[i] += o.lost[i];
      diam2[i] += o.diam2[i];
    }
  }
};

}  // namespace

EvolutionTrace evolve_experiment(int n_start, int n_end, std::uint64_t trials,
                                 std::uint64_t master_seed, int workers) {
  if (n_start < 1 || n_start >= n_end) {
    throw std::invalid_argument("evolve_experiment: need 1 <= n_start < n_end");
  }
  if (trials < 1) throw std::invalid_argument("evolve_experiment: trials must be >= 1");

  const int sizes = n_end - n_start + 1;
  const int words = words_for_bits(n_end);
  EvolveSums total(static_cast<std::size_t>(sizes));
  std::mutex merge_mu;

  auto one_trial = [&](std::uint64_t trial) {
    EvolveSums local(static_cast<std::size_t>(sizes));
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n_end) * words, 0);
    RngStream rng(master_seed, trial);
    {
      const Tournament t0 = gen_tournament(n_start, rng);
      const RowView v0 = t0.view();
      for (int u = 0; u < n_start; ++u) {
        std::memcpy(rows.data() + static_cast<std::size_t>(u) * words, v0.row(u),
                    sizeof(std::uint64_t) * static_cast<std::size_t>(v0.words));
      }
    }
    BitSource growth(rng);
    std::vector<char> prev_flags, flags;
    prev_flags.reserve(n_end);
    flags.reserve(n_end);

    for (int n = n_start; n <= n_end; ++n) {
      if (n > n_start) {
        // Append vertex n-1: one uniform bit per pair (i, n-1), i ascending;
        // bit 1 orients i -> new vertex.
        const int fresh = n - 1;
        for (int i = 0; i < fresh; ++i) {
          if (growth.next_bit()) {
            set_bit(rows.data() + static_cast<std::size_t>(i) * words, fresh);
          } else {
            set_bit(rows.data() + static_cast<std::size_t>(fresh) * words, i);
          }
        }
      }
      const RowView view{rows.data(), n, words};
      const bool diam2 = detail::closure_covers_all(view);
      flags.assign(static_cast<std::size_t>(n), 0);
      int count = 0;
      if (diam2) {
        for (int v = 0; v < n; ++v) {
          const int out = popcount_words(view.row(v), words);
          flags[v] = (2 * out <= n - 1) ? 1 : 0;
          count += flags[v];
        }
      } else {
        const std::vector<bool> general = detail::seymour_flags_general(view);
        for (int v = 0; v < n; ++v) {
          flags[v] = general[v] ? 1 : 0;
          count += flags[v];
        }
      }
      // Audit: the degree rule must agree with the full recomputation
      // whenever the closure test passed.
      if (diam2 && (n - n_start) % 16 == 0) {
        const std::vector<bool> general = detail::seymour_flags_general(view);
        for (int v = 0; v < n; ++v) {
          if (static_cast<bool>(flags[v]) != general[v]) {
            throw std::logic_error("evolve_experiment: degree-rule audit mismatch");
          }
        }
      }

      const std::size_t idx = static_cast<std::size_t>(n - n_start);
      local.s[idx] += static_cast<std::uint64_t>(count);
      local.diam2[idx] += diam2 ? 1 : 0;
      for (int v = 0; v < n; ++v) {
        const int out = popcount_words(view.row(v), words);
        const int in = n - 1 - out;
        if (n % 2 == 0) {
          if (in - out == 1) ++local.borderline_s[idx];
          if (out - in == 1) ++local.borderline_ns[idx];
        } else {
          if (in == out) ++local.borderline_s[idx];
        }
      }
      if (n > n_start) {
        const int prev_n = n - 1;
        for (int v = 0; v < prev_n; ++v) {
          if (!prev_flags[v] && flags[v]) ++local.gained[idx];
          if (prev_flags[v] && !flags[v]) ++local.lost[idx];
        }
      }
      prev_flags = flags;
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    total.add(local);
  };

  run_parallel(trials, workers, one_trial);

  EvolutionTrace trace;
  trace.n_start = n_start;
  trace.n_end = n_end;
  trace.trials = trials;
  trace.master_seed = master_seed;
  trace.steps.resize(static_cast<std::size_t>(sizes));
  const long double tl = static_cast<long double>(trials);
  for (int i = 0; i < sizes; ++i) {
    EvolutionStep& st = trace.steps[static_cast<std::size_t>(i)];
    st.n = n_start + i;
    st.mean_s = static_cast<double>(total.s[i] / tl);
    st.mean_borderline_seymour = static_cast<double>(total.borderline_s[i] / tl);
    st.mean_borderline_nonseymour = static_cast<double>(total.borderline_ns[i] / tl);
    st.mean_gained = static_cast<double>(total.gained[i] / tl);
    st.mean_lost = static_cast<double>(total.lost[i] / tl);
    st.frac_diam2 = static_cast<double>(total.diam2[i] / tl);
  }
  return trace;
}

namespace {

// Seymour count over single-word rows (n <= 11 for tournaments, <= 6 for the
// trichotomy enumeration), shared by both exhaustive drivers.
int seymour_count_word(const std::uint64_t* rows, int n) {
  int count = 0;
  for (int v = 0; v < n; ++v) {
    const std::uint64_t r = rows[v];
    std::uint64_t acc = 0;
    std::uint64_t bits = r;
    while (bits) {
      acc |= rows[std::countr_zero(bits)];
      bits &= bits - 1;
    }
    acc &= ~r;
    acc &= ~(std::uint64_t{1} << v);
    if (std::popcount(acc) >= std::popcount(r)) ++count;
  }
  return count;
}

ExactSummary summarize_exhaustive(int n, std::uint64_t total, std::uint64_t s1,
                                  std::uint64_t s2, int min_s,
                                  std::map<int, std::uint64_t> histogram) {
  ExactSummary out;
  out.n = n;
  out.total_graphs = total;
  out.min_s = min_s;
  out.histogram = std::move(histogram);
  out.exact_e_s.num = static_cast<__int128>(s1);
  out.exact_e_s.den = static_cast<__int128>(total);
  out.exact_e_s.reduce();
  // Population variance E[X^2] - E[X]^2 = (T*S2 - S1^2) / T^2, exact.
  out.exact_var_s.num = static_cast<__int128>(total) * static_cast<__int128>(s2) -
                        static_cast<__int128>(s1) * static_cast<__int128>(s1);
  out.exact_var_s.den = static_cast<__int128>(total) * static_cast<__int128>(total);
  out.exact_var_s.reduce();
  return out;
}

}  // namespace

ExactSummary exhaustive_tournaments(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("exhaustive_tournaments: n must be >= 1");
  const int cap = allow_large ? 11 : 7;
  if (n > cap) {
    throw std::invalid_argument(
        "exhaustive_tournaments: n exceeds the enumeration cap (pass the override "
        "to go beyond 7; hard limit 11)");
  }
  const int pairs = n * (n - 1) / 2;
  const std::uint64_t total = std::uint64_t{1} << pairs;
  std::uint64_t s1 = 0, s2 = 0;
  int min_s = n + 1;
  std::map<int, std::uint64_t> hist;
  std::uint64_t rows[12];
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    std::fill(rows, rows + n, 0);
    int bit = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++bit) {
        if (mask >> bit & 1) {
          rows[u] |= std::uint64_t{1} << v;
        } else {
          rows[v] |= std::uint64_t{1} << u;
        }
      }
    }
    const int s = seymour_count_word(rows, n);
    s1 += static_cast<std::uint64_t>(s);
    s2 += static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
    ++hist[s];
    min_s = std::min(min_s, s);
  }
  return summarize_exhaustive(n, total, s1, s2, min_s, std::move(hist));
}

ExactSummary exhaustive_digraphs(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("exhaustive_digraphs: n must be >= 1");
  const int cap = allow_large ? 6 : 5;
  if (n > cap) {
    throw std::invalid_argument(
        "exhaustive_digraphs: n exceeds the enumeration cap (pass the override to "
        "go to 6)");
  }
  const int pairs = n * (n - 1) / 2;
  std::uint64_t total = 1;
  for (int i = 0; i < pairs; ++i) total *= 3;
  std::uint64_t s1 = 0, s2 = 0;
  int min_s = n + 1;
  std::map<int, std::uint64_t> hist;
  std::vector<int> digit(static_cast<std::size_t>(pairs), 0);
  std::uint64_t rows[8];
  for (std::uint64_t g = 0; g < total; ++g) {
    std::fill(rows, rows + n, 0);
    int k = 0;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v, ++k) {
        if (digit[k] == 1) {
          rows[u] |= std::uint64_t{1} << v;
        } else if (digit[k] == 2) {
          rows[v] |= std::uint64_t{1} << u;
        }
      }
    }
    const int s = seymour_count_word(rows, n);
    s1 += static_cast<std::uint64_t>(s);
    s2 += static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(s);
    ++hist[s];
    min_s = std::min(min_s, s);
    // Base-3 odometer over the pair slots.
    for (int i = 0; i < pairs; ++i) {
      if (++digit[i] < 3) break;
      digit[i] = 0;
    }
  }
  return summarize_exhaustive(n, total, s1, s2, min_s, std::move(hist));
}

double variance_constant_estimate(int n, std::uint64_t trials, std::uint64_t master_seed) {
  if (trials < 1000) {
    throw std::invalid_argument("variance_constant_estimate: trials must be >= 1000");
  }
  ExperimentConfig cfg;
  cfg.model = Model::tournament;
  cfg.n = n;
  cfg.trials = trials;
  cfg.master_seed = master_seed;
  const TrialStats stats = run_tournament_trials(cfg);
  return stats.var_s / static_cast<double>(n);
}

}  // namespace seymour
