// Python bindings for the Seymour-vertex library.  Thin wrappers: graphs stay
// opaque Digraph objects, experiment results come back as plain dicts/lists,
// NaN sentinel fields become None.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "seymour/analytics.hpp"
#include "seymour/digraph.hpp"
#include "seymour/experiments.hpp"
#include "seymour/graph_ops.hpp"
#include "seymour/models.hpp"

namespace py = pybind11;

namespace {

seymour::Model parse_model(const std::string& name) {
  if (name == "tournament") return seymour::Model::tournament;
  if (name == "digraph") return seymour::Model::digraph;
  throw std::invalid_argument("model must be 'tournament' or 'digraph'");
}

py::object none_if_nan(double v) {
  if (std::isnan(v)) return py::none();
  return py::float_(v);
}

py::dict stats_dict(const seymour::TrialStats& st) {
  py::dict d;
  d["trials"] = st.trials;
  d["mean_s"] = st.mean_s;
  d["var_s"] = st.var_s;
  d["histogram"] = st.histogram;
  d["frac_all_seymour"] = st.frac_all_seymour;
  d["frac_deviating"] = none_if_nan(st.frac_deviating);
  d["mean_ratio_min"] = none_if_nan(st.mean_ratio_min);
  return d;
}

py::dict rational_dict(const seymour::ExactRational& r) {
  py::dict d;
  d["rational"] = r.str();
  d["value"] = r.approx();
  return d;
}

py::dict summary_dict(const seymour::ExactSummary& s) {
  py::dict d;
  d["n"] = s.n;
  d["total_graphs"] = s.total_graphs;
  d["exact_e_s"] = rational_dict(s.exact_e_s);
  d["exact_var_s"] = rational_dict(s.exact_var_s);
  d["min_s"] = s.min_s;
  d["histogram"] = s.histogram;
  return d;
}

seymour::ExperimentConfig make_config(const std::string& model, int n, double p,
                                      std::uint64_t trials, std::uint64_t master_seed,
                                      int workers, std::optional<double> deviation_A,
                                      std::optional<double> deviation_epsilon,
                                      bool want_min_ratio) {
  seymour::ExperimentConfig cfg;
  cfg.model = parse_model(model);
  cfg.n = n;
  cfg.p = p;
  cfg.trials = trials;
  cfg.master_seed = master_seed;
  cfg.workers = workers;
  cfg.deviation_A = deviation_A;
  cfg.deviation_epsilon = deviation_epsilon;
  cfg.want_min_ratio = want_min_ratio;
  return cfg;
}

seymour::Tournament as_tournament(const seymour::Digraph& g) {
  return seymour::Tournament::from_digraph(g);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Seymour vertices in random tournaments and digraphs";
  m.attr("__version__") = "0.1.0";
  m.attr("UNREACHABLE") = seymour::kUnreachable;

  py::class_<seymour::Digraph>(m, "Digraph",
                               "Directed graph stored as packed adjacency rows")
      .def(py::init<int>(), py::arg("n"))
      .def_static("from_text",
                  py::overload_cast<const std::string&>(&seymour::Digraph::from_text),
                  py::arg("text"),
                  "Parse the plain-text form: first line n, then n rows of 0/1")
      .def("to_text", &seymour::Digraph::to_text)
      .def("order", &seymour::Digraph::order)
      .def("has_arc", &seymour::Digraph::has_arc, py::arg("u"), py::arg("v"))
      .def("add_arc", &seymour::Digraph::add_arc, py::arg("u"), py::arg("v"))
      .def("remove_arc", &seymour::Digraph::remove_arc, py::arg("u"), py::arg("v"))
      .def("out_degree", &seymour::Digraph::out_degree, py::arg("u"))
      .def("in_degrees", &seymour::Digraph::in_degrees)
      .def("arc_count", &seymour::Digraph::arc_count)
      .def("__eq__",
           [](const seymour::Digraph& a, const seymour::Digraph& b) { return a == b; })
      .def("__repr__", [](const seymour::Digraph& g) {
        return "Digraph(n=" + std::to_string(g.order()) + ", arcs=" +
               std::to_string(g.arc_count()) + ")";
      });

  // ---- random models -------------------------------------------------------
  m.def(
      "gen_tournament",
      [](int n, std::uint64_t master_seed, std::uint64_t trial) {
        const seymour::ModelParams params{n, 0.5, master_seed};
        auto rng = seymour::stream_for_trial(params, trial);
        return seymour::gen_tournament(n, rng).digraph();
      },
      py::arg("n"), py::arg("master_seed"), py::arg("trial") = 0,
      "Uniform random tournament; (master_seed, trial) fixes the graph");
  m.def(
      "gen_digraph",
      [](int n, double p, std::uint64_t master_seed, std::uint64_t trial) {
        const seymour::ModelParams params{n, p, master_seed};
        auto rng = seymour::stream_for_trial(params, trial);
        return seymour::gen_digraph(n, p, rng);
      },
      py::arg("n"), py::arg("p"), py::arg("master_seed"), py::arg("trial") = 0,
      "Per pair: u->v with probability p, v->u with p, no edge with 1-2p");
  m.def("is_tournament", &seymour::is_tournament, py::arg("g"));
  m.def("parse_probability", &seymour::parse_probability, py::arg("text"),
        "Accepts '0.3' or '3/10'; must lie in [0, 1/2]");

  // ---- neighborhoods and Seymour sets -------------------------------------
  m.def(
      "seymour_set",
      [](const seymour::Digraph& g) { return seymour::seymour_set(g).to_vector(); },
      py::arg("g"), "Vertices v with |N2(v)| >= |N1(v)|");
  m.def(
      "seymour_set_degree_criterion",
      [](const seymour::Digraph& g) {
        return seymour::seymour_set_degree_criterion(as_tournament(g)).to_vector();
      },
      py::arg("g"),
      "Tournament degree rule out_degree <= in_degree; valid when every "
      "eccentricity is <= 2");
  m.def(
      "first_neighborhood",
      [](const seymour::Digraph& g, int v) {
        return seymour::first_neighborhood(g, v).to_vector();
      },
      py::arg("g"), py::arg("v"));
  m.def(
      "second_neighborhood",
      [](const seymour::Digraph& g, int v) {
        return seymour::second_neighborhood(g, v).to_vector();
      },
      py::arg("g"), py::arg("v"), "Vertices at directed distance exactly 2");
  m.def("distances_from", &seymour::distances_from, py::arg("g"), py::arg("v"),
        "BFS distances; unreachable vertices get the UNREACHABLE constant");
  m.def("eccentricity_at_most_2", &seymour::eccentricity_at_most_2, py::arg("g"));
  m.def(
      "neighborhood_profiles",
      [](const seymour::Digraph& g) {
        py::list out;
        for (const auto& p : seymour::neighborhood_profiles(g)) {
          py::dict d;
          d["vertex"] = p.vertex;
          d["n1"] = p.n1;
          d["n2"] = p.n2;
          d["in_degree"] = p.in_degree;
          d["out_degree"] = p.out_degree;
          d["is_seymour"] = p.is_seymour;
          out.append(d);
        }
        return out;
      },
      py::arg("g"));
  m.def(
      "find_triangle",
      [](const seymour::Digraph& g) -> py::object {
        const auto search = seymour::find_triangle_via_seymour(as_tournament(g));
        if (!search.triangle) return py::none();
        return py::make_tuple(search.triangle->a, search.triangle->b,
                              search.triangle->c);
      },
      py::arg("g"),
      "Directed triangle (a,b,c) found by walking from a Seymour vertex; needs "
      "a tournament on n=3k vertices with min in/out degree >= n/3");

  // ---- Monte Carlo experiments --------------------------------------------
  m.def(
      "run_trials",
      [](const std::string& model, int n, double p, std::uint64_t trials,
         std::uint64_t master_seed, int workers, std::optional<double> deviation_A,
         std::optional<double> deviation_epsilon, bool want_min_ratio) {
        const auto cfg = make_config(model, n, p, trials, master_seed, workers,
                                     deviation_A, deviation_epsilon, want_min_ratio);
        const auto st = cfg.model == seymour::Model::tournament
                            ? seymour::run_tournament_trials(cfg)
                            : seymour::run_digraph_trials(cfg);
        return stats_dict(st);
      },
      py::arg("model"), py::arg("n"), py::arg("p") = 0.5, py::arg("trials") = 1000,
      py::arg("master_seed") = 1729, py::arg("workers") = 1,
      py::arg("deviation_A") = py::none(), py::arg("deviation_epsilon") = py::none(),
      py::arg("want_min_ratio") = false,
      "Monte Carlo |S| statistics; deterministic for fixed seed at any worker "
      "count");
  m.def(
      "deviation_experiment",
      [](const std::vector<int>& n_list, const std::string& model, double p,
         std::uint64_t trials, std::uint64_t master_seed, int workers,
         std::optional<double> A, std::optional<double> epsilon) {
        auto cfg = make_config(model, 1, p, trials, master_seed, workers, A, epsilon,
                               false);
        cfg.n_list = n_list;
        py::list out;
        for (const auto& row : seymour::deviation_experiment(cfg)) {
          py::dict d;
          d["n"] = row.n;
          d["trials"] = row.trials;
          d["mean_s"] = row.mean_s;
          d["var_s"] = row.var_s;
          d["frac_all_seymour"] = row.frac_all_seymour;
          d["threshold_sqrt"] = none_if_nan(row.threshold_sqrt);
          d["frac_sqrt"] = none_if_nan(row.frac_sqrt);
          d["threshold_pow"] = none_if_nan(row.threshold_pow);
          d["frac_pow"] = none_if_nan(row.frac_pow);
          out.append(d);
        }
        return out;
      },
      py::arg("n_list"), py::arg("model") = "tournament", py::arg("p") = 0.5,
      py::arg("trials") = 10000, py::arg("master_seed") = 1729, py::arg("workers") = 1,
      py::arg("A") = py::none(), py::arg("epsilon") = py::none(),
      "Per-n fraction of trials with ||S| - mean| beyond each threshold style");
  m.def(
      "evolve",
      [](int n_start, int n_end, std::uint64_t trials, std::uint64_t master_seed,
         int workers) {
        const auto trace =
            seymour::evolve_experiment(n_start, n_end, trials, master_seed, workers);
        py::dict d;
        d["n_start"] = trace.n_start;
        d["n_end"] = trace.n_end;
        d["trials"] = trace.trials;
        d["master_seed"] = trace.master_seed;
        py::list steps;
        for (const auto& s : trace.steps) {
          py::dict sd;
          sd["n"] = s.n;
          sd["mean_s"] = s.mean_s;
          sd["mean_borderline_seymour"] = s.mean_borderline_seymour;
          sd["mean_borderline_nonseymour"] = s.mean_borderline_nonseymour;
          sd["mean_gained"] = s.mean_gained;
          sd["mean_lost"] = s.mean_lost;
          sd["frac_diam2"] = s.frac_diam2;
          steps.append(sd);
        }
        d["steps"] = steps;
        return d;
      },
      py::arg("n_start"), py::arg("n_end"), py::arg("trials"),
      py::arg("master_seed") = 1729, py::arg("workers") = 1,
      "Grow one tournament per trial a vertex at a time, tracking |S| and "
      "borderline degrees");
  m.def("variance_constant_estimate", &seymour::variance_constant_estimate,
        py::arg("n"), py::arg("trials"), py::arg("master_seed"),
        "Sample Var|S|/n from tournament trials (trials >= 1000)");

  // ---- exhaustive enumeration ---------------------------------------------
  m.def(
      "exhaustive_tournaments",
      [](int n, bool allow_large) {
        return summary_dict(seymour::exhaustive_tournaments(n, allow_large));
      },
      py::arg("n"), py::arg("allow_large") = false,
      "Exact E|S|, Var|S|, min |S|, histogram over all 2^C(n,2) tournaments");
  m.def(
      "exhaustive_digraphs",
      [](int n, bool allow_large) {
        return summary_dict(seymour::exhaustive_digraphs(n, allow_large));
      },
      py::arg("n"), py::arg("allow_large") = false,
      "Exact statistics over all 3^C(n,2) digraphs without anti-parallel pairs");

  // ---- closed-form analytics ----------------------------------------------
  m.def("binom_tail_le", &seymour::binom_tail_le, py::arg("m"), py::arg("p"),
        py::arg("k"), "P(Bin(m,p) <= k), exact summation");
  m.def("central_binom_pmf", &seymour::central_binom_pmf, py::arg("m"),
        "P(Bin(m,1/2) = floor(m/2))");
  m.def("central_binom_stirling", &seymour::central_binom_stirling, py::arg("m"),
        "sqrt(2/(pi*m)) approximation of the central term");
  m.def("chernoff_upper", &seymour::chernoff_upper, py::arg("mean"),
        py::arg("epsilon"), "[e^eps / (1+eps)^(1+eps)]^mean");
  m.def("variance_coeff_even", &seymour::variance_coeff_even,
        "1/4 - 1/(2*pi)");
  m.def("variance_coeff_odd", &seymour::variance_coeff_odd,
        "1/4 - 1/(2*pi) + 1/sqrt(2*pi)");
  m.def("variance_asymptote", &seymour::tournament_variance_asymptote, py::arg("n"),
        "Parity-dependent linear-variance value at n");
  m.def(
      "variance_pi_terms",
      [](long long n) {
        const auto t = seymour::variance_pi_terms(n);
        py::dict d;
        d["pi1"] = t.pi1;
        d["pi2"] = t.pi2;
        d["diff"] = t.diff;
        d["pi1_sq"] = t.pi1_sq;
        return d;
      },
      py::arg("n"), "Central-term pair for odd n; equal by the halving identity");
  m.def("p1_upper_bound", &seymour::p1_upper_bound, py::arg("n"));
  m.def(
      "expectation_bounds",
      [](long long n) {
        const auto b = seymour::tournament_expectation_bounds(n);
        py::dict d;
        d["n"] = b.n;
        d["parity"] = b.parity == seymour::Parity::even ? "even" : "odd";
        d["e_s_lower"] = b.e_s_lower;
        d["e_s_upper"] = b.e_s_upper;
        d["e_s_lower_raw"] = b.e_s_lower_raw;
        d["e_s_upper_raw"] = b.e_s_upper_raw;
        d["lower_clamped"] = b.lower_clamped;
        d["upper_clamped"] = b.upper_clamped;
        d["var_asymptote"] = b.var_asymptote;
        d["c_constant"] = b.c_constant;
        d["diameter_defect"] = b.diameter_defect;
        d["log_diameter_defect"] = b.log_diameter_defect;
        return d;
      },
      py::arg("n"), "Expectation sandwich for the uniform tournament model");
  m.def(
      "digraph_window",
      [](long long n, double epsilon, double eta) {
        const auto w = seymour::digraph_window(n, epsilon, eta);
        py::dict d;
        d["n"] = w.n;
        d["epsilon"] = w.epsilon;
        d["eta"] = w.eta;
        d["p_min"] = w.p_min;
        d["p_max"] = w.p_max;
        d["delta_n"] = w.delta_n;
        d["epsilon_n"] = w.epsilon_n;
        d["residual"] = w.residual;
        d["empty"] = w.empty;
        return d;
      },
      py::arg("n"), py::arg("epsilon"), py::arg("eta"),
      "Valid-p window [p_min, p_max) for the all-Seymour regime");
  m.def(
      "digraph_expectation_lower",
      [](long long n, double p) {
        const auto lb = seymour::digraph_expectation_lower(n, p);
        py::dict d;
        d["n"] = lb.n;
        d["p"] = lb.p;
        d["value"] = lb.value;
        d["value_raw"] = lb.value_raw;
        d["clamped"] = lb.clamped;
        d["value_strict"] = lb.value_strict;
        d["value_strict_raw"] = lb.value_strict_raw;
        d["strict_clamped"] = lb.strict_clamped;
        d["tail"] = lb.tail;
        d["tail_strict"] = lb.tail_strict;
        d["defect"] = lb.defect;
        d["log_defect"] = lb.log_defect;
        return d;
      },
      py::arg("n"), py::arg("p"), "Lower bound on E|S| for the digraph model");
}
