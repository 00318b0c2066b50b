#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "seymour/analytics.hpp"
#include "seymour/experiments.hpp"
#include "seymour/graph_ops.hpp"
#include "seymour/models.hpp"
#include "seymour/report.hpp"

namespace {

// Fixed default seed ("1729") keeps casual runs reproducible; pass
// --seed random to draw fresh entropy instead.
std::uint64_t parse_seed(const std::string& text) {
  if (text == "random") {
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  }
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("--seed expects an unsigned integer or 'random'");
  }
  return value;
}

int env_or_hardware_workers() {
  if (const char* env = std::getenv("SEYMOUR_WORKERS")) {
    int value = 0;
    const std::string text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value < 1) {
      throw std::invalid_argument("SEYMOUR_WORKERS must be a positive integer");
    }
    return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!std::cout) throw std::runtime_error("failed writing to standard output");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing output file: " + path);
}

seymour::Digraph read_graph(const std::string& path) {
  std::stringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  try {
    return seymour::Digraph::from_text(buffer.str());
  } catch (const std::invalid_argument& e) {
    // Bad input data is a runtime failure (exit 1), not a flag error (exit 2).
    throw std::runtime_error(std::string("malformed graph input: ") + e.what());
  }
}

struct CommonOpts {
  std::string seed_text = "1729";
  std::string output;
  std::string format;
  int workers = 0;  // 0 = resolve from env/hardware at dispatch time
};

int resolved_workers(const CommonOpts& common) {
  return common.workers > 0 ? common.workers : env_or_hardware_workers();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Seymour-vertex toolkit: random tournament/digraph generation, second-"
      "neighborhood counting, closed-form bounds, Monte Carlo and exhaustive "
      "experiments.\n"
      "Exit codes: 0 success, 2 invalid flags/config, 1 runtime failure."};
  app.require_subcommand(1);

  // --- gen ---------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate one random graph (text format)");
  struct {
    std::string model = "tournament";
    int n = 0;
    std::string p;
    std::uint64_t trial = 0;
    CommonOpts common;
  } gen_opts;
  gen->add_option("--model", gen_opts.model, "tournament | digraph")
      ->check(CLI::IsMember({"tournament", "digraph"}));
  gen->add_option("--n", gen_opts.n, "vertex count")->required();
  gen->add_option("--p", gen_opts.p,
                  "per-direction arc probability (digraph model; decimal or ratio)");
  gen->add_option("--trial", gen_opts.trial, "stream index within the seed (default 0)");
  gen->add_option("--seed", gen_opts.common.seed_text,
                  "master seed (default 1729); 'random' draws entropy");
  gen->add_option("--output,-o", gen_opts.common.output, "output path (default stdout)");

  // --- count -------------------------------------------------------------
  auto* count = app.add_subcommand(
      "count", "Count Seymour vertices and print per-vertex profiles");
  struct {
    std::string input;
    std::string format = "text";
  } count_opts;
  count->add_option("--input,-i", count_opts.input,
                    "graph file in the text format ('-' or omitted = stdin)");
  count->add_option("--format", count_opts.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));

  // --- bounds ------------------------------------------------------------
  auto* bounds = app.add_subcommand(
      "bounds", "Closed-form expectation/variance bounds and the digraph p-window");
  struct {
    std::string model = "tournament";
    long long n = 0;
    double epsilon = 0.1;
    double eta = 0.1;
    std::string p;
    std::string format = "json";
    std::string output;
  } bounds_opts;
  bounds->add_option("--model", bounds_opts.model, "tournament | digraph")
      ->check(CLI::IsMember({"tournament", "digraph"}));
  bounds->add_option("--n", bounds_opts.n, "vertex count")->required();
  bounds->add_option("--epsilon", bounds_opts.epsilon,
                     "window slack for p_min (digraph; default 0.1)");
  bounds->add_option("--eta", bounds_opts.eta,
                     "window slack for p_max (digraph; default 0.1)");
  bounds->add_option("--p", bounds_opts.p,
                     "also evaluate the expectation lower bound at this p (digraph)");
  bounds->add_option("--format", bounds_opts.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--output,-o", bounds_opts.output, "output path (default stdout)");

  // --- mc ----------------------------------------------------------------
  auto* mc = app.add_subcommand("mc", "Monte Carlo trials of |S| for one model/size");
  struct {
    std::string model = "tournament";
    int n = 0;
    std::string p;
    std::uint64_t trials = 1000;
    bool min_ratio = false;
    double deviation_A = 0.0;
    double deviation_eps = 0.0;
    CommonOpts common;
  } mc_opts;
  bool mc_has_A = false, mc_has_eps = false;
  mc->add_option("--model", mc_opts.model, "tournament | digraph")
      ->check(CLI::IsMember({"tournament", "digraph"}));
  mc->add_option("--n", mc_opts.n, "vertex count")->required();
  mc->add_option("--p", mc_opts.p, "arc probability (digraph; decimal or ratio)");
  mc->add_option("--trials", mc_opts.trials, "trial count (default 1000)");
  mc->add_flag("--min-ratio", mc_opts.min_ratio,
               "also average min_v |N2(v)|/|N1(v)| (general kernel every trial)");
  mc->add_option("--deviation-A", mc_opts.deviation_A,
                 "flag trials with ||S|-mean| >= A*sqrt(n ln n)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { mc_has_A = true; });
  mc->add_option("--deviation-epsilon", mc_opts.deviation_eps,
                 "flag trials with ||S|-mean| >= n^(1/2+eps)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { mc_has_eps = true; });
  mc->add_option("--seed", mc_opts.common.seed_text,
                 "master seed (default 1729); 'random' draws entropy");
  mc->add_option("--workers", mc_opts.common.workers,
                 "worker threads (default: SEYMOUR_WORKERS env or hardware)");
  mc->add_option("--format", mc_opts.common.format, "csv | json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  mc->add_option("--output,-o", mc_opts.common.output, "output path (default stdout)");

  // --- exhaustive --------------------------------------------------------
  auto* exhaustive = app.add_subcommand(
      "exhaustive", "Enumerate every labeled graph of one model at small n");
  struct {
    std::string model = "tournament";
    int n = 0;
    bool allow_large = false;
    std::string format = "csv";
    std::string output;
  } ex_opts;
  exhaustive->add_option("--model", ex_opts.model, "tournament | digraph")
      ->check(CLI::IsMember({"tournament", "digraph"}));
  exhaustive->add_option("--n", ex_opts.n, "vertex count")->required();
  exhaustive->add_flag("--allow-large", ex_opts.allow_large,
                       "lift the default size cap (tournament 7->11, digraph 5->6)");
  exhaustive->add_option("--format", ex_opts.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
  exhaustive->add_option("--output,-o", ex_opts.output, "output path (default stdout)");

  // --- deviation ---------------------------------------------------------
  auto* deviation = app.add_subcommand(
      "deviation", "Deviation fractions against both threshold styles, per n");
  struct {
    std::string model = "tournament";
    std::vector<int> n_list;
    std::string p;
    std::uint64_t trials = 10000;
    double A = 0.0;
    double eps = 0.0;
    CommonOpts common;
  } dev_opts;
  bool dev_has_A = false, dev_has_eps = false;
  deviation->add_option("--model", dev_opts.model, "tournament | digraph")
      ->check(CLI::IsMember({"tournament", "digraph"}));
  deviation->add_option("--n", dev_opts.n_list, "vertex counts (repeatable)")
      ->required()
      ->expected(-1);
  deviation->add_option("--p", dev_opts.p, "arc probability (digraph)");
  deviation->add_option("--trials", dev_opts.trials, "trials per n (default 10000, min 1000)");
  deviation->add_option("--A", dev_opts.A, "threshold A*sqrt(n ln n)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { dev_has_A = true; });
  deviation->add_option("--epsilon", dev_opts.eps, "threshold n^(1/2+eps)")
      ->trigger_on_parse()
      ->each([&](const std::string&) { dev_has_eps = true; });
  deviation->add_option("--seed", dev_opts.common.seed_text,
                        "master seed (default 1729); 'random' draws entropy");
  deviation->add_option("--workers", dev_opts.common.workers,
                        "worker threads (default: SEYMOUR_WORKERS env or hardware)");
  deviation->add_option("--format", dev_opts.common.format, "csv | json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  deviation->add_option("--output,-o", dev_opts.common.output,
                        "output path (default stdout)");

  // --- evolve ------------------------------------------------------------
  auto* evolve = app.add_subcommand(
      "evolve", "Grow tournaments vertex by vertex, tracing |S| and borderline counts");
  struct {
    int n_start = 0;
    int n_end = 0;
    std::uint64_t trials = 1000;
    CommonOpts common;
  } evo_opts;
  evolve->add_option("--n-start", evo_opts.n_start, "starting size")->required();
  evolve->add_option("--n-end", evo_opts.n_end, "final size")->required();
  evolve->add_option("--trials", evo_opts.trials, "trial count (default 1000)");
  evolve->add_option("--seed", evo_opts.common.seed_text,
                     "master seed (default 1729); 'random' draws entropy");
  evolve->add_option("--workers", evo_opts.common.workers,
                     "worker threads (default: SEYMOUR_WORKERS env or hardware)");
  evolve->add_option("--format", evo_opts.common.format, "csv | json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  evolve->add_option("--output,-o", evo_opts.common.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      const std::uint64_t seed = parse_seed(gen_opts.common.seed_text);
      seymour::RngStream rng(seed, gen_opts.trial);
      if (gen_opts.model == "tournament") {
        const seymour::Tournament t = seymour::gen_tournament(gen_opts.n, rng);
        emit(gen_opts.common.output, t.digraph().to_text());
      } else {
        if (gen_opts.p.empty()) {
          throw std::invalid_argument("gen --model digraph requires --p");
        }
        const double p = seymour::parse_probability(gen_opts.p);
        const seymour::Digraph g = seymour::gen_digraph(gen_opts.n, p, rng);
        emit(gen_opts.common.output, g.to_text());
      }
    } else if (count->parsed()) {
      const seymour::Digraph g = read_graph(count_opts.input);
      emit("", count_opts.format == "json" ? seymour::profiles_json(g)
                                           : seymour::profiles_text(g));
    } else if (bounds->parsed()) {
      if (bounds_opts.model == "tournament") {
        const seymour::BoundsReport r =
            seymour::tournament_expectation_bounds(bounds_opts.n);
        emit(bounds_opts.output, bounds_opts.format == "csv"
                                     ? seymour::bounds_csv(r)
                                     : seymour::bounds_json(r));
      } else {
        const seymour::DigraphWindow w =
            seymour::digraph_window(bounds_opts.n, bounds_opts.epsilon, bounds_opts.eta);
        std::unique_ptr<seymour::DigraphLowerBound> lower;
        if (!bounds_opts.p.empty()) {
          const double p = seymour::parse_probability(bounds_opts.p);
          lower = std::make_unique<seymour::DigraphLowerBound>(
              seymour::digraph_expectation_lower(bounds_opts.n, p));
        }
        emit(bounds_opts.output,
             bounds_opts.format == "csv"
                 ? seymour::digraph_bounds_csv(w, lower.get())
                 : seymour::digraph_bounds_json(w, lower.get()));
      }
    } else if (mc->parsed()) {
      seymour::ExperimentConfig cfg;
      cfg.model = mc_opts.model == "tournament" ? seymour::Model::tournament
                                                : seymour::Model::digraph;
      cfg.n = mc_opts.n;
      cfg.trials = mc_opts.trials;
      cfg.master_seed = parse_seed(mc_opts.common.seed_text);
      cfg.workers = resolved_workers(mc_opts.common);
      cfg.want_min_ratio = mc_opts.min_ratio;
      if (mc_has_A) cfg.deviation_A = mc_opts.deviation_A;
      if (mc_has_eps) cfg.deviation_epsilon = mc_opts.deviation_eps;
      if (cfg.model == seymour::Model::digraph) {
        if (mc_opts.p.empty()) {
          throw std::invalid_argument("mc --model digraph requires --p");
        }
        cfg.p = seymour::parse_probability(mc_opts.p);
      }
      const seymour::TrialStats st = cfg.model == seymour::Model::tournament
                                         ? seymour::run_tournament_trials(cfg)
                                         : seymour::run_digraph_trials(cfg);
      emit(mc_opts.common.output, mc_opts.common.format == "json"
                                      ? seymour::trial_json(cfg, st)
                                      : seymour::trial_csv(cfg, st));
    } else if (exhaustive->parsed()) {
      const seymour::ExactSummary summary =
          ex_opts.model == "tournament"
              ? seymour::exhaustive_tournaments(ex_opts.n, ex_opts.allow_large)
              : seymour::exhaustive_digraphs(ex_opts.n, ex_opts.allow_large);
      emit(ex_opts.output, ex_opts.format == "json"
                               ? seymour::exact_summary_json(summary, ex_opts.model)
                               : seymour::exact_summary_text(summary, ex_opts.model));
    } else if (deviation->parsed()) {
      seymour::ExperimentConfig cfg;
      cfg.model = dev_opts.model == "tournament" ? seymour::Model::tournament
                                                 : seymour::Model::digraph;
      cfg.n_list = dev_opts.n_list;
      cfg.trials = dev_opts.trials;
      cfg.master_seed = parse_seed(dev_opts.common.seed_text);
      cfg.workers = resolved_workers(dev_opts.common);
      if (dev_has_A) cfg.deviation_A = dev_opts.A;
      if (dev_has_eps) cfg.deviation_epsilon = dev_opts.eps;
      if (!dev_has_A && !dev_has_eps) {
        throw std::invalid_argument("deviation requires --A and/or --epsilon");
      }
      if (cfg.model == seymour::Model::digraph) {
        if (dev_opts.p.empty()) {
          throw std::invalid_argument("deviation --model digraph requires --p");
        }
        cfg.p = seymour::parse_probability(dev_opts.p);
      }
      const std::vector<seymour::DeviationRow> rows = seymour::deviation_experiment(cfg);
      emit(dev_opts.common.output, dev_opts.common.format == "json"
                                       ? seymour::deviation_json(cfg, rows)
                                       : seymour::deviation_csv(cfg, rows));
    } else if (evolve->parsed()) {
      const std::uint64_t seed = parse_seed(evo_opts.common.seed_text);
      const seymour::EvolutionTrace trace = seymour::evolve_experiment(
          evo_opts.n_start, evo_opts.n_end, evo_opts.trials, seed,
          resolved_workers(evo_opts.common));
      emit(evo_opts.common.output, evo_opts.common.format == "json"
                                       ? seymour::evolve_json(trace)
                                       : seymour::evolve_csv(trace));
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
