#include "seymour/report.hpp"

#include <charconv>
#include <cmath>

#include "json.hpp"
#include "seymour/graph_ops.hpp"

namespace seymour {

namespace {

using nlohmann::json;

// Empty cell for unset values keeps the column count stable.
std::string csv_cell(double v) { return std::isnan(v) ? std::string() : format_double(v); }

json json_number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

json histogram_pairs(const std::map<int, std::uint64_t>& hist) {
  json arr = json::array();
  for (const auto& [value, count] : hist) {
    arr.push_back(json::array({value, count}));
  }
  return arr;
}

const char* model_name(Model m) {
  return m == Model::tournament ? "tournament" : "digraph";
}

double model_p(const ExperimentConfig& cfg) {
  return cfg.model == Model::tournament ? 0.5 : cfg.p;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json deviation_rows_json(const std::vector<DeviationRow>& rows) {
  json arr = json::array();
  for (const DeviationRow& r : rows) {
    arr.push_back({{"n", r.n},
                   {"trials", r.trials},
                   {"mean_s", r.mean_s},
                   {"var_s", r.var_s},
                   {"frac_all_seymour", r.frac_all_seymour},
                   {"threshold_sqrt", json_number_or_null(r.threshold_sqrt)},
                   {"frac_sqrt", json_number_or_null(r.frac_sqrt)},
                   {"threshold_pow", json_number_or_null(r.threshold_pow)},
                   {"frac_pow", json_number_or_null(r.frac_pow)}});
  }
  return arr;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

const char* const kTrialCsvHeader =
    "n,p,trials,mean_s,var_s,frac_all_seymour,frac_deviating,seed";

std::string trial_csv(const ExperimentConfig& cfg, const TrialStats& st) {
  std::string out = kTrialCsvHeader;
  out += "\n";
  out += std::to_string(cfg.n) + "," + format_double(model_p(cfg)) + "," +
         std::to_string(st.trials) + "," + format_double(st.mean_s) + "," +
         format_double(st.var_s) + "," + format_double(st.frac_all_seymour) + "," +
         csv_cell(st.frac_deviating) + "," + std::to_string(cfg.master_seed) + "\n";
  return out;
}

std::string deviation_csv(const ExperimentConfig& cfg,
                          const std::vector<DeviationRow>& rows) {
  std::string out = kTrialCsvHeader;
  out += "\n";
  for (const DeviationRow& r : rows) {
    // The pinned frac_deviating column carries the A-threshold fraction when A
    // was set, the power-threshold fraction otherwise; the JSON document has
    // both styles separately.
    const double frac = cfg.deviation_A ? r.frac_sqrt : r.frac_pow;
    out += std::to_string(r.n) + "," + format_double(model_p(cfg)) + "," +
           std::to_string(r.trials) + "," + format_double(r.mean_s) + "," +
           format_double(r.var_s) + "," + format_double(r.frac_all_seymour) + "," +
           csv_cell(frac) + "," + std::to_string(cfg.master_seed) + "\n";
  }
  return out;
}

std::string evolve_csv(const EvolutionTrace& trace) {
  std::string out =
      "n,mean_s,mean_borderline_seymour,mean_borderline_nonseymour,mean_gained,"
      "mean_lost,frac_diam2\n";
  for (const EvolutionStep& s : trace.steps) {
    out += std::to_string(s.n) + "," + format_double(s.mean_s) + "," +
           format_double(s.mean_borderline_seymour) + "," +
           format_double(s.mean_borderline_nonseymour) + "," +
           format_double(s.mean_gained) + "," + format_double(s.mean_lost) + "," +
           format_double(s.frac_diam2) + "\n";
  }
  return out;
}

std::string trial_json(const ExperimentConfig& cfg, const TrialStats& st) {
  json j{{"model", model_name(cfg.model)},
         {"n", cfg.n},
         {"p", model_p(cfg)},
         {"trials", st.trials},
         {"seed", cfg.master_seed},
         {"mean_s", st.mean_s},
         {"var_s", st.var_s},
         {"frac_all_seymour", st.frac_all_seymour},
         {"frac_deviating", json_number_or_null(st.frac_deviating)},
         {"mean_ratio_min", json_number_or_null(st.mean_ratio_min)},
         {"histogram", histogram_pairs(st.histogram)}};
  return dump(j);
}

std::string deviation_json(const ExperimentConfig& cfg,
                           const std::vector<DeviationRow>& rows) {
  json j{{"model", model_name(cfg.model)},
         {"p", model_p(cfg)},
         {"trials", cfg.trials},
         {"seed", cfg.master_seed},
         {"deviation_A",
          cfg.deviation_A ? json(*cfg.deviation_A) : json(nullptr)},
         {"deviation_epsilon",
          cfg.deviation_epsilon ? json(*cfg.deviation_epsilon) : json(nullptr)},
         {"rows", deviation_rows_json(rows)}};
  return dump(j);
}

std::string evolve_json(const EvolutionTrace& trace) {
  json steps = json::array();
  for (const EvolutionStep& s : trace.steps) {
    steps.push_back({{"n", s.n},
                     {"mean_s", s.mean_s},
                     {"mean_borderline_seymour", s.mean_borderline_seymour},
                     {"mean_borderline_nonseymour", s.mean_borderline_nonseymour},
                     {"mean_gained", s.mean_gained},
                     {"mean_lost", s.mean_lost},
                     {"frac_diam2", s.frac_diam2}});
  }
  json j{{"n_start", trace.n_start},
         {"n_end", trace.n_end},
         {"trials", trace.trials},
         {"seed", trace.master_seed},
         {"steps", steps}};
  return dump(j);
}

namespace {

json finite_or_null(double v) { return json_number_or_null(std::isinf(v) ? std::nan("") : v); }

json bounds_obj(const BoundsReport& r) {
  return json{{"n", r.n},
              {"parity", r.parity == Parity::even ? "even" : "odd"},
              {"e_s_lower", r.e_s_lower},
              {"e_s_upper", r.e_s_upper},
              {"e_s_lower_raw", r.e_s_lower_raw},
              {"e_s_upper_raw", r.e_s_upper_raw},
              {"lower_clamped", r.lower_clamped},
              {"upper_clamped", r.upper_clamped},
              {"var_asymptote", r.var_asymptote},
              {"c_constant", r.c_constant},
              {"diameter_defect", r.diameter_defect},
              {"log_diameter_defect", finite_or_null(r.log_diameter_defect)}};
}

json window_obj(const DigraphWindow& w) {
  return json{{"n", w.n},
              {"epsilon", w.epsilon},
              {"eta", w.eta},
              {"p_min", w.p_min},
              {"p_max", w.p_max},
              {"delta_n", w.delta_n},
              {"epsilon_n", w.epsilon_n},
              {"residual", finite_or_null(w.residual)},
              {"empty", w.empty}};
}

json lower_obj(const DigraphLowerBound& b) {
  return json{{"n", b.n},
              {"p", b.p},
              {"value", b.value},
              {"value_raw", b.value_raw},
              {"clamped", b.clamped},
              {"value_strict", b.value_strict},
              {"value_strict_raw", b.value_strict_raw},
              {"strict_clamped", b.strict_clamped},
              {"tail", b.tail},
              {"tail_strict", b.tail_strict},
              {"defect", b.defect},
              {"log_defect", finite_or_null(b.log_defect)}};
}

// field,value rows; nested objects use dotted prefixes, nulls print empty.
void flatten_csv(const json& j, const std::string& prefix, std::string& out) {
  for (const auto& [key, value] : j.items()) {
    const std::string name = prefix.empty() ? key : prefix + "." + key;
    if (value.is_object()) {
      flatten_csv(value, name, out);
    } else if (value.is_null()) {
      out += name + ",\n";
    } else if (value.is_boolean()) {
      out += name + "," + (value.get<bool>() ? "true" : "false") + "\n";
    } else if (value.is_number_float()) {
      out += name + "," + format_double(value.get<double>()) + "\n";
    } else if (value.is_string()) {
      out += name + "," + value.get<std::string>() + "\n";
    } else {
      out += name + "," + value.dump() + "\n";
    }
  }
}

std::string as_field_csv(const json& j) {
  std::string out = "field,value\n";
  flatten_csv(j, "", out);
  return out;
}

}  // namespace

std::string bounds_json(const BoundsReport& r) { return dump(bounds_obj(r)); }

std::string window_json(const DigraphWindow& w) { return dump(window_obj(w)); }

std::string digraph_lower_json(const DigraphLowerBound& b) { return dump(lower_obj(b)); }

std::string digraph_bounds_json(const DigraphWindow& w, const DigraphLowerBound* lower) {
  json j{{"window", window_obj(w)}};
  j["lower_bound"] = lower ? lower_obj(*lower) : json(nullptr);
  return dump(j);
}

std::string bounds_csv(const BoundsReport& r) { return as_field_csv(bounds_obj(r)); }

std::string digraph_bounds_csv(const DigraphWindow& w, const DigraphLowerBound* lower) {
  json j{{"window", window_obj(w)}};
  j["lower_bound"] = lower ? lower_obj(*lower) : json(nullptr);
  return as_field_csv(j);
}

std::string exact_summary_text(const ExactSummary& s, const std::string& model) {
  std::string out = "model=" + model + " n=" + std::to_string(s.n) +
                    " total_graphs=" + std::to_string(s.total_graphs) + "\n";
  out += "e_s=" + s.exact_e_s.str() + " (" + format_double(s.exact_e_s.approx()) + ")\n";
  out += "var_s=" + s.exact_var_s.str() + " (" + format_double(s.exact_var_s.approx()) +
         ")\n";
  out += "min_s=" + std::to_string(s.min_s) + "\n";
  out += "s,count\n";
  for (const auto& [value, count] : s.histogram) {
    out += std::to_string(value) + "," + std::to_string(count) + "\n";
  }
  return out;
}

std::string exact_summary_json(const ExactSummary& s, const std::string& model) {
  json j{{"model", model},
         {"n", s.n},
         {"total_graphs", s.total_graphs},
         {"exact_e_s", {{"rational", s.exact_e_s.str()}, {"value", s.exact_e_s.approx()}}},
         {"exact_var_s",
          {{"rational", s.exact_var_s.str()}, {"value", s.exact_var_s.approx()}}},
         {"min_s", s.min_s},
         {"histogram", histogram_pairs(s.histogram)}};
  return dump(j);
}

std::string profiles_text(const Digraph& g) {
  const std::vector<NeighborhoodProfile> profiles = neighborhood_profiles(g);
  int count = 0;
  for (const NeighborhoodProfile& p : profiles) count += p.is_seymour ? 1 : 0;
  std::string out = "n=" + std::to_string(g.order()) +
                    " seymour_count=" + std::to_string(count) + "\n";
  out += "vertex,n1,n2,in_degree,out_degree,is_seymour\n";
  for (const NeighborhoodProfile& p : profiles) {
    out += std::to_string(p.vertex) + "," + std::to_string(p.n1) + "," +
           std::to_string(p.n2) + "," + std::to_string(p.in_degree) + "," +
           std::to_string(p.out_degree) + "," + (p.is_seymour ? "1" : "0") + "\n";
  }
  return out;
}

std::string profiles_json(const Digraph& g) {
  const std::vector<NeighborhoodProfile> profiles = neighborhood_profiles(g);
  int count = 0;
  json arr = json::array();
  for (const NeighborhoodProfile& p : profiles) {
    count += p.is_seymour ? 1 : 0;
    arr.push_back({{"vertex", p.vertex},
                   {"n1", p.n1},
                   {"n2", p.n2},
                   {"in_degree", p.in_degree},
                   {"out_degree", p.out_degree},
                   {"is_seymour", p.is_seymour}});
  }
  json j{{"n", g.order()}, {"seymour_count", count}, {"profiles", arr}};
  return dump(j);
}

}  // namespace seymour
